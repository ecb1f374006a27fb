#include "wedgematch/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "wedgematch/error.hpp"

namespace wedgematch {

namespace {

std::string strip_spaces(std::string_view text)
{
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

// Cursor over whitespace-free text.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    bool done() const { return pos_ == text_.size(); }
    bool peek(char c) const { return !done() && text_[pos_] == c; }

    void expect(char c)
    {
        if (!peek(c))
            throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos_)
                             + " in \"" + std::string(text_) + "\"");
        ++pos_;
    }

    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    int integer()
    {
        int value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first)
            throw ParseError("expected an integer at offset " + std::to_string(pos_) + " in \""
                             + std::string(text_) + "\"");
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Matching matching_from_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON matching: ") + e.what());
    }
    if (!doc.is_array())
        throw ParseError("JSON matching must be an array of pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& item : doc) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer()
            || !item[1].is_number_integer())
            throw ParseError("JSON matching entries must be [left, right] integer pairs");
        pairs.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return Matching::from_pairs(pairs);
}

WedgePath heights_from_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON heights: ") + e.what());
    }
    if (!doc.is_array())
        throw ParseError("JSON heights must be an array of integers");
    std::vector<int> heights;
    for (const auto& item : doc) {
        if (!item.is_number_integer())
            throw ParseError("JSON heights must be integers");
        heights.push_back(item.get<int>());
    }
    return WedgePath::from_heights(std::move(heights));
}

} // namespace

Matching parse_matching(std::string_view text)
{
    const std::string compact = strip_spaces(text);
    if (compact.starts_with("["))
        return matching_from_json(compact);
    if (compact.empty())
        throw ParseError("empty matching text");
    Scanner scan(compact);
    std::vector<std::pair<int, int>> pairs;
    do {
        scan.expect('(');
        const int a = scan.integer();
        scan.expect(',');
        const int b = scan.integer();
        scan.expect(')');
        pairs.emplace_back(a, b);
    } while (scan.accept(','));
    if (!scan.done())
        throw ParseError("trailing characters in \"" + compact + "\"");
    return Matching::from_pairs(pairs);
}

std::string format_matching(const Matching& m)
{
    std::string out;
    for (const Edge& e : m.edges()) {
        if (!out.empty())
            out.push_back(',');
        out += "(" + std::to_string(e.left) + "," + std::to_string(e.right) + ")";
    }
    return out;
}

nlohmann::json matching_to_json(const Matching& m)
{
    nlohmann::json out = nlohmann::json::array();
    for (const Edge& e : m.edges())
        out.push_back({e.left, e.right});
    return out;
}

WedgePath parse_heights(std::string_view text)
{
    const std::string compact = strip_spaces(text);
    if (compact.starts_with("["))
        return heights_from_json(compact);
    if (compact.empty())
        throw ParseError("empty height list");
    Scanner scan(compact);
    std::vector<int> heights;
    do {
        heights.push_back(scan.integer());
    } while (scan.accept(','));
    if (!scan.done())
        throw ParseError("trailing characters in \"" + compact + "\"");
    return WedgePath::from_heights(std::move(heights));
}

std::string format_heights(const WedgePath& p)
{
    std::string out;
    for (int a : p.heights()) {
        if (!out.empty())
            out.push_back(',');
        out += std::to_string(a);
    }
    return out;
}

nlohmann::json path_to_json(const WedgePath& p)
{
    return nlohmann::json(std::vector<int>(p.heights().begin(), p.heights().end()));
}

WedgePath parse_path(std::string_view text)
{
    const std::string compact = strip_spaces(text);
    if (!compact.empty() && std::isalpha(static_cast<unsigned char>(compact.front())))
        return WedgePath::parse_steps(compact);
    return parse_heights(compact);
}

InputKind parse_input_kind(std::string_view name)
{
    if (name == "auto")
        return InputKind::Auto;
    if (name == "matching")
        return InputKind::Matching;
    if (name == "steps" || name == "path")
        return InputKind::Steps;
    if (name == "heights")
        return InputKind::Heights;
    throw ParseError("unknown input kind '" + std::string(name)
                     + "' (expected auto, matching, steps or heights)");
}

Object parse_object(std::string_view text, InputKind kind)
{
    switch (kind) {
    case InputKind::Matching: return parse_matching(text);
    case InputKind::Steps: return WedgePath::parse_steps(strip_spaces(text));
    case InputKind::Heights: return parse_heights(text);
    case InputKind::Auto: break;
    }
    const std::string compact = strip_spaces(text);
    if (compact.starts_with("(") || compact.starts_with("[["))
        return parse_matching(compact);
    return parse_path(compact);
}

} // namespace wedgematch
