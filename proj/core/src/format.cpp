#include "cyclefactor/format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cyclefactor {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
    std::string raw;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        lines.push_back({number, std::move(tokens), raw});
    }
    return lines;
}

[[noreturn]] void syntax_error(const Line& line, const std::string& why) {
    fail(Errc::SyntaxError, "line " + std::to_string(line.number) + ": " + why);
}

int parse_int(const Line& line, const std::string& tok) {
    try {
        std::size_t pos = 0;
        int value = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        syntax_error(line, "expected an integer, got '" + tok + "'");
    }
}

// Rest of the line after the first `skip` tokens, used for label text.
std::string line_tail(const Line& line, int skip) {
    std::istringstream ls(line.raw);
    std::string tok;
    for (int i = 0; i < skip; ++i) ls >> tok;
    std::string rest;
    std::getline(ls, rest);
    std::size_t start = rest.find_first_not_of(" \t");
    return start == std::string::npos ? "" : rest.substr(start);
}

} // namespace

ProblemInstance parse_instance(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) fail(Errc::SyntaxError, "line 1: empty instance");

    ProblemInstance inst;
    std::size_t at = 0;

    // Optional problem header before the graph header.
    const Line& head = lines[0];
    if (head.tokens[0] == "ham") {
        if (head.tokens.size() != 3) syntax_error(head, "expected 'ham <s> <t>'");
        inst.kind = ProblemKind::HamPath;
        inst.terminals = {parse_int(head, head.tokens[1]), parse_int(head, head.tokens[2])};
        ++at;
    } else if (head.tokens[0] == "vdp") {
        if (head.tokens.size() != 5) syntax_error(head, "expected 'vdp <s1> <t1> <s2> <t2>'");
        inst.kind = ProblemKind::TwoVdp;
        for (int i = 1; i <= 4; ++i) inst.terminals.push_back(parse_int(head, head.tokens[i]));
        ++at;
    } else if (head.tokens[0] == "col3") {
        if (head.tokens.size() != 1) syntax_error(head, "expected 'col3'");
        inst.kind = ProblemKind::EdgeColoring;
        ++at;
    } else if (head.tokens[0] == "evencyc") {
        if (head.tokens.size() != 1) syntax_error(head, "expected 'evencyc'");
        inst.kind = ProblemKind::EvenDicycle;
        ++at;
    } else if (head.tokens[0] == "3dm") {
        if (head.tokens.size() != 2) syntax_error(head, "expected '3dm <n>'");
        inst.kind = ProblemKind::ThreeDm;
        inst.dm_size = parse_int(head, head.tokens[1]);
        if (inst.dm_size < 0) syntax_error(head, "negative universe size");
        for (++at; at < lines.size(); ++at) {
            const Line& line = lines[at];
            if (line.tokens[0] != "t" || line.tokens.size() != 4)
                syntax_error(line, "expected 't <x> <y> <z>'");
            std::array<int, 3> tup{parse_int(line, line.tokens[1]), parse_int(line, line.tokens[2]),
                                   parse_int(line, line.tokens[3])};
            for (int x : tup)
                if (x < 0 || x >= inst.dm_size)
                    fail(Errc::DanglingReference,
                         "line " + std::to_string(line.number) + ": tuple entry " + std::to_string(x) +
                             " outside universe of size " + std::to_string(inst.dm_size));
            inst.tuples.push_back(tup);
        }
        return inst;
    }

    if (at >= lines.size()) fail(Errc::SyntaxError, "missing graph header");
    const Line& gh = lines[at];
    if (gh.tokens[0] != "g" || gh.tokens.size() != 3)
        syntax_error(gh, "expected 'g {mixed|directed|undirected} <n>'");
    const std::string& mode = gh.tokens[1];
    if (mode != "mixed" && mode != "directed" && mode != "undirected")
        syntax_error(gh, "unknown graph mode '" + mode + "'");
    int n = parse_int(gh, gh.tokens[2]);
    if (n < 0) syntax_error(gh, "negative vertex count");
    ++at;

    std::vector<std::pair<int, int>> edges, arcs;
    struct PendingPair { int line; std::string a, b; };
    struct PendingLabel { int line; bool vertex; std::string id, text; };
    std::vector<PendingPair> pending_pairs;
    std::vector<PendingLabel> pending_labels;
    std::vector<std::pair<int, int>> pending_z; // (line, vertex)

    for (; at < lines.size(); ++at) {
        const Line& line = lines[at];
        const std::string& kw = line.tokens[0];
        if (kw == "e" || kw == "a") {
            if (line.tokens.size() != 3) syntax_error(line, "expected '" + kw + " <u> <v>'");
            if (kw == "e" && mode == "directed") syntax_error(line, "edge in a directed instance");
            if (kw == "a" && mode == "undirected") syntax_error(line, "arc in an undirected instance");
            int u = parse_int(line, line.tokens[1]);
            int v = parse_int(line, line.tokens[2]);
            (kw == "e" ? edges : arcs).emplace_back(u, v);
        } else if (kw == "z") {
            if (line.tokens.size() != 2) syntax_error(line, "expected 'z <v>'");
            pending_z.emplace_back(line.number, parse_int(line, line.tokens[1]));
        } else if (kw == "p") {
            if (line.tokens.size() != 3) syntax_error(line, "expected 'p <eid> <eid>'");
            pending_pairs.push_back({line.number, line.tokens[1], line.tokens[2]});
        } else if (kw == "label") {
            if (line.tokens.size() < 4) syntax_error(line, "expected 'label {v|e} <id> <text>'");
            if (line.tokens[1] == "v")
                pending_labels.push_back({line.number, true, line.tokens[2], line_tail(line, 3)});
            else if (line.tokens[1] == "e")
                pending_labels.push_back({line.number, false, line.tokens[2], line_tail(line, 3)});
            else
                syntax_error(line, "label target must be 'v' or 'e'");
        } else {
            syntax_error(line, "unknown directive '" + kw + "'");
        }
    }

    try {
        inst.graph = MixedGraph::build(n, std::move(edges), std::move(arcs));
    } catch (const Error& e) {
        throw Error(e.code(), std::string("in graph body: ") + e.what());
    }

    for (auto [line, v] : pending_z) {
        if (v < 0 || v >= n)
            fail(Errc::DanglingReference,
                 "line " + std::to_string(line) + ": terminal names missing vertex " + std::to_string(v));
        inst.z.push_back(v);
    }
    std::sort(inst.z.begin(), inst.z.end());
    inst.z.erase(std::unique(inst.z.begin(), inst.z.end()), inst.z.end());

    auto resolve_edge = [&](int line, const std::string& tok) {
        auto id = parse_element_id(tok);
        if (!id || !inst.graph.has_element(*id))
            fail(Errc::DanglingReference,
                 "line " + std::to_string(line) + ": pair names missing element '" + tok + "'");
        if (id->kind != ElementKind::Edge)
            fail(Errc::DanglingReference,
                 "line " + std::to_string(line) + ": pair element '" + tok + "' is not an edge");
        return *id;
    };
    for (const auto& pp : pending_pairs) {
        ElementId a = resolve_edge(pp.line, pp.a);
        ElementId b = resolve_edge(pp.line, pp.b);
        if (a == b)
            fail(Errc::DanglingReference,
                 "line " + std::to_string(pp.line) + ": pair uses the same edge twice");
        if (b < a) std::swap(a, b);
        inst.pairs.emplace_back(a, b);
    }
    std::sort(inst.pairs.begin(), inst.pairs.end());
    inst.pairs.erase(std::unique(inst.pairs.begin(), inst.pairs.end()), inst.pairs.end());

    for (const auto& pl : pending_labels) {
        if (pl.vertex) {
            Line fake{pl.line, {}, ""};
            int v = parse_int(fake, pl.id);
            if (v < 0 || v >= n)
                fail(Errc::DanglingReference,
                     "line " + std::to_string(pl.line) + ": label names missing vertex " + pl.id);
            inst.graph.set_vertex_label(v, pl.text);
        } else {
            auto id = parse_element_id(pl.id);
            if (!id || !inst.graph.has_element(*id))
                fail(Errc::DanglingReference,
                     "line " + std::to_string(pl.line) + ": label names missing element '" + pl.id + "'");
            inst.graph.set_element_label(*id, pl.text);
        }
    }
    return inst;
}

std::string serialize_instance(const ProblemInstance& inst) {
    std::ostringstream out;
    switch (inst.kind) {
    case ProblemKind::HamPath:
        out << "ham " << inst.terminals.at(0) << ' ' << inst.terminals.at(1) << '\n';
        break;
    case ProblemKind::TwoVdp:
        out << "vdp " << inst.terminals.at(0) << ' ' << inst.terminals.at(1) << ' '
            << inst.terminals.at(2) << ' ' << inst.terminals.at(3) << '\n';
        break;
    case ProblemKind::EdgeColoring: out << "col3\n"; break;
    case ProblemKind::EvenDicycle: out << "evencyc\n"; break;
    case ProblemKind::ThreeDm: {
        out << "3dm " << inst.dm_size << '\n';
        for (const auto& t : inst.tuples) out << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
        return out.str();
    }
    case ProblemKind::Graph: break;
    }

    const MixedGraph& g = inst.graph;
    const char* mode = g.arc_count() == 0 && g.edge_count() > 0 ? "undirected"
                       : g.edge_count() == 0 && g.arc_count() > 0 ? "directed"
                                                                  : "mixed";
    out << "g " << mode << ' ' << g.vertex_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    for (const auto& [u, v] : g.arcs()) out << "a " << u << ' ' << v << '\n';
    for (int v : inst.z) out << "z " << v << '\n';
    for (const auto& [a, b] : inst.pairs) out << "p " << to_string(a) << ' ' << to_string(b) << '\n';
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.vertex_label(v).empty()) out << "label v " << v << ' ' << g.vertex_label(v) << '\n';
    for (int i = 0; i < g.edge_count(); ++i)
        if (!g.element_label(edge_id(i)).empty())
            out << "label e e" << i << ' ' << g.element_label(edge_id(i)) << '\n';
    for (int i = 0; i < g.arc_count(); ++i)
        if (!g.element_label(arc_id(i)).empty())
            out << "label e a" << i << ' ' << g.element_label(arc_id(i)) << '\n';
    return out.str();
}

ProblemInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::SyntaxError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_factor(const CycleFactor& f) {
    std::ostringstream out;
    for (const auto& c : f.cycles) {
        out << "cycle";
        for (const auto& oe : c.elements) out << ' ' << to_string(oe.id) << (oe.forward ? '+' : '-');
        out << '\n';
    }
    return out.str();
}

CycleFactor parse_factor(const std::string& text) {
    CycleFactor f;
    for (const Line& line : tokenize(text)) {
        if (line.tokens[0] != "cycle") syntax_error(line, "expected a 'cycle' line");
        OrientedCycle c;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
            std::string tok = line.tokens[i];
            if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
                syntax_error(line, "element '" + tok + "' needs a +/- orientation mark");
            bool forward = tok.back() == '+';
            tok.pop_back();
            auto id = parse_element_id(tok);
            if (!id) syntax_error(line, "bad element id '" + tok + "'");
            c.elements.push_back({*id, forward});
        }
        if (c.elements.empty()) syntax_error(line, "empty cycle");
        f.cycles.push_back(std::move(c));
    }
    return f;
}

std::string serialize_path(const ArcPath& p) {
    std::ostringstream out;
    out << "path";
    for (ElementId id : p.arcs) out << ' ' << to_string(id);
    out << '\n';
    return out.str();
}

std::string serialize_vdp(const ArcPath& p1, const ArcPath& p2) {
    return serialize_path(p1) + serialize_path(p2);
}

std::string serialize_coloring(const EdgeColoring& c) {
    std::ostringstream out;
    for (std::size_t i = 0; i < c.color.size(); ++i) out << "color e" << i << ' ' << c.color[i] << '\n';
    return out.str();
}

std::string serialize_dm_matching(const DmMatching& m, const ProblemInstance& inst) {
    std::ostringstream out;
    for (int idx : m.tuple_indexes) {
        const auto& t = inst.tuples.at(idx);
        out << "m " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    }
    return out.str();
}

} // namespace cyclefactor
