#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sudoku_chroma/graph.hpp"

namespace sudoku_chroma {

// Vertex numbering conventions, fixed so that constructions and file dumps
// are reproducible:
//   path:n, cycle:n, complete:n   vertices 0..n-1 labeled v1..vn
//   wheel:n                       rim v1..vn on ids 0..n-1, hub "v" last (id n)
//   star:n                        n leaves v1..vn on ids 0..n-1, hub "v" last
//   corona(G,H)                   G's vertices first, then the copy of H owned
//                                 by G-vertex i on ids nG + i*nH .. nG + (i+1)*nH - 1
//   line(G)                       vertex j is the j-th edge of G.edges()

enum class Family { Path, Cycle, Complete, Wheel, Star };

struct FamilySpec {
    Family family;
    int n = 0;
};

inline Graph generate(const FamilySpec& spec) {
    const int n = spec.n;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    auto numbered = [&](int count) {
        for (int i = 0; i < count; ++i) labels.push_back("v" + std::to_string(i + 1));
    };
    switch (spec.family) {
        case Family::Path:
            if (n < 1) throw InvalidSpecError("path needs at least 1 vertex");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            numbered(n);
            return Graph(n, std::move(edges), std::move(labels));
        case Family::Cycle:
            if (n < 3) throw InvalidSpecError("cycle needs at least 3 vertices");
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            numbered(n);
            return Graph(n, std::move(edges), std::move(labels));
        case Family::Complete:
            if (n < 1) throw InvalidSpecError("complete graph needs at least 1 vertex");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            numbered(n);
            return Graph(n, std::move(edges), std::move(labels));
        case Family::Wheel:
            if (n < 3) throw InvalidSpecError("wheel needs at least 3 rim vertices");
            for (int i = 0; i < n; ++i) {
                edges.emplace_back(i, (i + 1) % n);
                edges.emplace_back(i, n);
            }
            numbered(n);
            labels.push_back("v");
            return Graph(n + 1, std::move(edges), std::move(labels));
        case Family::Star:
            if (n < 1) throw InvalidSpecError("star needs at least 1 leaf");
            for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
            numbered(n);
            labels.push_back("v");
            return Graph(n + 1, std::move(edges), std::move(labels));
    }
    throw Error("unknown family");
}

namespace detail {

inline std::string label_or_id(const Graph& g, int v) {
    return g.label(v).empty() ? std::to_string(v) : g.label(v);
}

}  // namespace detail

// Corona product: one copy of g plus one copy of h per g-vertex, the owner
// joined to every vertex of its copy.  Order nG*(1+nH), size mG + nG*(mH+nH).
inline Graph corona(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    std::vector<Edge> edges(g.edges());
    std::vector<std::string> labels;
    labels.reserve(ng * (1 + nh));
    for (int i = 0; i < ng; ++i) labels.push_back(detail::label_or_id(g, i));
    for (int i = 0; i < ng; ++i) {
        const int base = ng + i * nh;
        for (const auto& [u, v] : h.edges()) edges.emplace_back(base + u, base + v);
        for (int j = 0; j < nh; ++j) {
            edges.emplace_back(i, base + j);
            labels.push_back(detail::label_or_id(h, j) + ":" + std::to_string(i + 1));
        }
    }
    return Graph(ng * (1 + nh), std::move(edges), std::move(labels));
}

// Line graph: one vertex per edge of g (in g.edges() order), adjacent when
// the source edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    const auto& src = g.edges();
    const int m = static_cast<int>(src.size());
    if (m == 0) throw UnsupportedGraphError("line graph of an edgeless graph is empty");
    std::vector<Edge> edges;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto& [u1, v1] = src[a];
            const auto& [u2, v2] = src[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) edges.emplace_back(a, b);
        }
    std::vector<std::string> labels;
    labels.reserve(m);
    for (const auto& [u, v] : src)
        labels.push_back(detail::label_or_id(g, u) + "-" + detail::label_or_id(g, v));
    return Graph(m, std::move(edges), std::move(labels));
}

// Position of edge {u,v} in g.edges(), i.e. the id of the line-graph vertex
// that represents it.
inline int edge_index(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    const auto& edges = g.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
    if (it == edges.end() || *it != Edge{u, v})
        throw Error("edge {" + std::to_string(u) + "," + std::to_string(v) + "} not present");
    return static_cast<int>(it - edges.begin());
}

namespace detail {

// Recursive-descent parser for family expressions:
//   expr := ("path"|"cycle"|"complete"|"wheel"|"star") ":" int
//         | "corona" "(" expr "," expr ")"
//         | "line" "(" expr ")"
class FamilyExprParser {
public:
    explicit FamilyExprParser(std::string_view text) : text_(text) {}

    Graph parse() {
        Graph g = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return g;
    }

private:
    Graph expression() {
        skip_space();
        const std::size_t start = pos_;
        std::string word = identifier();
        if (word == "corona") {
            expect('(');
            Graph g = expression();
            expect(',');
            Graph h = expression();
            expect(')');
            return corona(g, h);
        }
        if (word == "line") {
            expect('(');
            Graph g = expression();
            expect(')');
            return line_graph(g);
        }
        Family family;
        if (word == "path") family = Family::Path;
        else if (word == "cycle") family = Family::Cycle;
        else if (word == "complete") family = Family::Complete;
        else if (word == "wheel") family = Family::Wheel;
        else if (word == "star") family = Family::Star;
        else {
            pos_ = start;
            fail("unknown family '" + word + "'");
        }
        expect(':');
        return generate({family, integer()});
    }

    std::string identifier() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a family name");
        return std::string(text_.substr(start, pos_ - start));
    }

    int integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("family expression, offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Graph parse_family_expression(std::string_view text) {
    return detail::FamilyExprParser(text).parse();
}

}  // namespace sudoku_chroma
