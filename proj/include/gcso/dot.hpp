#pragma once

#include <gcso/analysis.hpp>
#include <gcso/automaton.hpp>
#include <gcso/secret_model.hpp>
#include <gcso/verifier.hpp>

#include <sstream>
#include <string>
#include <string_view>

namespace gcso {

namespace detail {

inline std::string dot_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace detail

// Graphviz rendering of a verifier. Nodes are listed in discovery order as z0, z1, ...
// and labelled with their pairs "(x, y:{members})"; violating nodes are filled grey.
inline std::string export_dot(const Verifier& v, const Dfa& g, const DynamicSecretModel& h)
{
    std::ostringstream out;
    out << "digraph verifier {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box, fontname=\"Helvetica\"];\n";
    out << "  start [shape=point];\n";
    for (Verifier::NodeIndex z = 0; z < v.node_count(); ++z) {
        const auto& node = v.node(z);
        std::string label;
        for (const auto& p : node.pairs) {
            if (!label.empty())
                label += "\\n";
            label += "(" + detail::dot_escape(g.state_name(p.system)) + ", "
                     + detail::dot_escape(h.state_name(p.secret)) + ":{";
            bool first = true;
            for (StateId x : h.members(p.secret)) {
                label += (first ? "" : ", ") + detail::dot_escape(g.state_name(x));
                first = false;
            }
            label += "})";
        }
        out << "  z" << z << " [label=\"" << label << "\"";
        if (is_violating(node, h))
            out << ", style=filled, fillcolor=grey";
        out << "];\n";
    }
    out << "  start -> z0;\n";
    for (Verifier::NodeIndex z = 0; z < v.node_count(); ++z)
        for (const auto& [t, target] : v.edges(z))
            out << "  z" << z << " -> z" << target << " [label=\"" << detail::dot_escape(g.event_name(t)) << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace gcso
