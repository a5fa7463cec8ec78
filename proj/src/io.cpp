#include "gvm/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gvm/errors.hpp"

namespace gvm {

Graph read_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag >> n) || tag != "n" || n < 1)
                throw parse_error("edge list line " + std::to_string(lineno) +
                                  ": expected header 'n <count>', got '" + line + "'");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v))
            throw parse_error("edge list line " + std::to_string(lineno) +
                              ": expected 'u v', got '" + line + "'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw parse_error("edge list has no 'n <count>' header");
    return Graph::build(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read graph file '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write graph file '" + path + "'");
    write_edge_list(g, out);
}

std::string to_edge_list_string(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

namespace {

// Recursive-descent parser over the expression grammar. `pos` always points
// at the next unconsumed character of the full input, so errors can report
// an absolute position.
struct ExprParser {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg + " at position " + std::to_string(pos) + " in '" +
                              text + "'",
                          pos);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at(char c) const { return pos < text.size() && text[pos] == c; }

    void expect(char c) {
        skip_ws();
        if (!at(c)) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    std::string peek_word() const {
        std::size_t p = pos;
        while (p < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_'))
            ++p;
        return text.substr(pos, p - pos);
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos) fail("expected an integer");
        long long value = 0;
        for (std::size_t i = start; i < pos; ++i) value = value * 10 + (text[i] - '0');
        if (value > 1000000) fail("integer too large");
        return static_cast<int>(value);
    }

    std::vector<int> parse_int_list() {
        std::vector<int> out{parse_int()};
        skip_ws();
        while (at(',')) {
            ++pos;
            out.push_back(parse_int());
            skip_ws();
        }
        return out;
    }

    std::vector<Graph> parse_graph_list() {
        std::vector<Graph> out{parse_expr()};
        skip_ws();
        while (at(',')) {
            ++pos;
            out.push_back(parse_expr());
            skip_ws();
        }
        return out;
    }

    Graph parse_constructor(const std::string& word) {
        pos += word.size();
        expect(':');
        if (word == "kpartite") return complete_multipartite(parse_int_list());
        int n = parse_int();
        if (word == "cycle") return cycle(n);
        if (word == "path") return path(n);
        if (word == "complete") return complete(n);
        return empty_graph(n);  // word == "empty"
    }

    Graph parse_product(const std::string& word) {
        pos += word.size();
        expect('(');
        Graph result = empty_graph(1);
        if (word == "tensor" || word == "lex") {
            Graph a = parse_expr();
            expect(',');
            Graph b = parse_expr();
            result = word == "tensor" ? tensor(a, b) : lexicographic(a, b);
        } else if (word == "hjoin" || word == "corona") {
            Graph h = parse_expr();
            expect(';');
            std::vector<Graph> parts = parse_graph_list();
            result = word == "hjoin" ? h_join(h, parts) : generalized_corona(h, parts);
        } else if (word == "embed") {
            result = embed_in_gvm(parse_expr());
        } else {  // inflate
            Graph g = parse_expr();
            expect(';');
            result = inflate(g, parse_int_list());
        }
        expect(')');
        return result;
    }

    Graph parse_file_path() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ',' && text[pos] != ';' &&
               text[pos] != ')')
            ++pos;
        std::size_t end = pos;
        while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1])))
            --end;
        if (start == end) fail("expected a graph");
        return read_edge_list_file(text.substr(start, end - start));
    }

    Graph parse_expr() {
        skip_ws();
        std::string word = peek_word();
        std::size_t after = pos + word.size();
        char next = after < text.size() ? text[after] : '\0';
        if (next == ':' &&
            (word == "cycle" || word == "path" || word == "complete" ||
             word == "empty" || word == "kpartite"))
            return parse_constructor(word);
        if (next == '(' &&
            (word == "tensor" || word == "lex" || word == "hjoin" ||
             word == "corona" || word == "embed" || word == "inflate"))
            return parse_product(word);
        if (next == ':' || next == '(')
            fail("unknown constructor '" + word + "'");
        return parse_file_path();
    }

    Graph parse_all() {
        Graph g = parse_expr();
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return g;
    }
};

}  // namespace

Graph parse_graph_source(const std::string& text) {
    return ExprParser{text}.parse_all();
}

}  // namespace gvm
