#pragma once

// Text formats for systems (.aut) and dynamic-secret models (.sec).
//
//   # comment to end of line
//   [states]       x0 x1 A B C
//   [alphabet]     a b u1 u2
//   [observable]   a b               (.aut only)
//   [initial]      x0
//   [transitions]  one "source event target" per line
//   [members]      one "state = x1 x2 ..." per line, right side may be empty (.sec only)
//
// Tokens are whitespace-separated. A section header stands alone on its line.
// Declaration lists may span several lines.

#include <gcso/automaton.hpp>
#include <gcso/errors.hpp>
#include <gcso/secret_model.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcso {

using AutomatonDocument = DfaSpec;
using SecretModelDocument = SecretModelSpec;

namespace detail {

struct Token {
    std::string text;
    std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
        const auto begin = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
        if (pos > begin)
            out.push_back({std::string(line.substr(begin, pos - begin)), begin + 1});
    }
    return out;
}

class SectionParser {
public:
    SectionParser(std::string_view text, std::set<std::string> allowed)
        : text_(text), allowed_(std::move(allowed))
    {
    }

    template <class OnLine>
    void run(OnLine&& on_line)
    {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            auto end = text_.find('\n', pos);
            if (end == std::string_view::npos)
                end = text_.size();
            std::string_view line = text_.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;

            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            auto tokens = tokenize(line);
            if (tokens.empty())
                continue;

            const auto& first = tokens.front().text;
            if (first.front() == '[') {
                if (tokens.size() != 1 || first.back() != ']' || first.size() < 3)
                    throw ParseError(line_no, tokens.front().column, "malformed section header");
                auto name = first.substr(1, first.size() - 2);
                if (!allowed_.contains(name))
                    throw ParseError(line_no, tokens.front().column, "unknown section [" + name + "]");
                if (!seen_.insert(name).second)
                    throw ParseError(line_no, tokens.front().column, "duplicate section [" + name + "]");
                current_ = name;
                continue;
            }
            if (current_.empty())
                throw ParseError(line_no, tokens.front().column, "content before the first section header");
            on_line(current_, tokens, line_no);
        }
        for (const auto& name : allowed_)
            if (!seen_.contains(name))
                throw ParseError(line_no, 1, "missing section [" + name + "]");
    }

private:
    std::string_view text_;
    std::set<std::string> allowed_;
    std::set<std::string> seen_;
    std::string current_;
};

inline void check_token(const Token& token, std::size_t line)
{
    if (!is_valid_name(token.text))
        throw ParseError(line, token.column, "invalid identifier '" + token.text + "'");
}

// Handles the sections shared by both formats; returns false for anything else.
class CommonSections {
public:
    explicit CommonSections(DfaSpec& spec) : spec_(spec) {}

    bool accept(const std::string& section, const std::vector<Token>& tokens, std::size_t line)
    {
        if (section == "states" || section == "alphabet" || section == "observable") {
            auto& list = section == "states" ? spec_.states : section == "alphabet" ? spec_.alphabet : spec_.observable;
            for (const auto& t : tokens) {
                check_token(t, line);
                list.push_back(t.text);
            }
            return true;
        }
        if (section == "initial") {
            for (const auto& t : tokens) {
                check_token(t, line);
                if (has_initial_)
                    throw ParseError(line, t.column, "more than one initial state");
                spec_.initial = t.text;
                has_initial_ = true;
            }
            return true;
        }
        if (section == "transitions") {
            if (tokens.size() != 3)
                throw ParseError(line, tokens.front().column, "transition must be 'source event target'");
            for (const auto& t : tokens)
                check_token(t, line);
            if (!keys_.emplace(tokens[0].text, tokens[1].text).second)
                throw ParseError(line, tokens[0].column,
                                 "duplicate transition from (" + tokens[0].text + ", " + tokens[1].text + ")");
            spec_.transitions.push_back({tokens[0].text, tokens[1].text, tokens[2].text});
            return true;
        }
        return false;
    }

    void finish(std::size_t last_line) const
    {
        if (!has_initial_)
            throw ParseError(last_line, 1, "no initial state given");
    }

private:
    DfaSpec& spec_;
    bool has_initial_ = false;
    std::set<std::pair<std::string, std::string>> keys_;
};

inline std::size_t line_count(std::string_view text)
{
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
}

inline void write_list(std::ostringstream& out, const char* header, const std::vector<std::string>& items)
{
    out << '[' << header << "]\n";
    for (std::size_t i = 0; i < items.size(); ++i)
        out << (i ? " " : "") << items[i];
    if (!items.empty())
        out << '\n';
}

inline void write_common(std::ostringstream& out, const DfaSpec& spec, bool with_observable)
{
    write_list(out, "states", spec.states);
    write_list(out, "alphabet", spec.alphabet);
    if (with_observable)
        write_list(out, "observable", spec.observable);
    out << "[initial]\n" << spec.initial << '\n';
    out << "[transitions]\n";
    for (const auto& t : spec.transitions)
        out << t.source << ' ' << t.event << ' ' << t.target << '\n';
}

} // namespace detail

inline AutomatonDocument parse_automaton(std::string_view text)
{
    AutomatonDocument doc;
    detail::CommonSections common(doc);
    detail::SectionParser parser(text, {"states", "alphabet", "observable", "initial", "transitions"});
    parser.run([&](const std::string& section, const std::vector<detail::Token>& tokens, std::size_t line) {
        common.accept(section, tokens, line);
    });
    common.finish(detail::line_count(text));
    return doc;
}

inline SecretModelDocument parse_secret_model(std::string_view text)
{
    SecretModelDocument doc;
    detail::CommonSections common(doc.automaton);
    std::set<std::string> described;
    detail::SectionParser parser(text, {"states", "alphabet", "initial", "transitions", "members"});
    parser.run([&](const std::string& section, const std::vector<detail::Token>& tokens, std::size_t line) {
        if (common.accept(section, tokens, line))
            return;
        // members: "state = x1 x2 ..." with '=' possibly glued to its neighbours
        std::string joined;
        for (const auto& t : tokens)
            joined += t.text + ' ';
        const auto eq = joined.find('=');
        if (eq == std::string::npos)
            throw ParseError(line, tokens.front().column, "members line must be 'state = x1 x2 ...'");
        auto lhs = detail::tokenize(std::string_view(joined).substr(0, eq));
        auto rhs = detail::tokenize(std::string_view(joined).substr(eq + 1));
        if (lhs.size() != 1)
            throw ParseError(line, tokens.front().column, "members line must name exactly one state before '='");
        MembersSpec entry{lhs[0].text, {}};
        detail::check_token({entry.state, tokens.front().column}, line);
        for (const auto& t : rhs) {
            if (t.text.find('=') != std::string::npos)
                throw ParseError(line, tokens.front().column, "more than one '=' on a members line");
            detail::check_token({t.text, tokens.front().column}, line);
            entry.members.push_back(t.text);
        }
        if (!described.insert(entry.state).second)
            throw ParseError(line, tokens.front().column, "second members line for state '" + entry.state + "'");
        doc.members.push_back(std::move(entry));
    });
    common.finish(detail::line_count(text));
    return doc;
}

inline std::string to_text(const AutomatonDocument& doc)
{
    std::ostringstream out;
    detail::write_common(out, doc, true);
    return out.str();
}

inline std::string to_text(const SecretModelDocument& doc)
{
    std::ostringstream out;
    detail::write_common(out, doc.automaton, false);
    out << "[members]\n";
    for (const auto& m : doc.members) {
        out << m.state << " =";
        for (const auto& x : m.members)
            out << ' ' << x;
        out << '\n';
    }
    return out.str();
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Dfa load_system(const std::string& path)
{
    return Dfa::from_spec(parse_automaton(read_text_file(path)));
}

inline DynamicSecretModel load_secret_model(const std::string& path, const Dfa& g)
{
    return DynamicSecretModel::bind(parse_secret_model(read_text_file(path)), g);
}

} // namespace gcso
