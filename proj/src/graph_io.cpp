#include "netclust/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace netclust {

namespace {

struct Token {
    enum class Kind { key, integer, real, string, lbracket, rbracket, end };
    Kind kind;
    std::string text;
    std::int64_t int_value = 0;
    int line = 0;
    int column = 0;
};

class GmlLexer {
public:
    explicit GmlLexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= text_.size()) {
            t.kind = Token::Kind::end;
            return t;
        }
        const char c = text_[pos_];
        if (c == '[') {
            advance();
            t.kind = Token::Kind::lbracket;
            return t;
        }
        if (c == ']') {
            advance();
            t.kind = Token::Kind::rbracket;
            return t;
        }
        if (c == '"') {
            advance();
            std::string value;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                value.push_back(text_[pos_]);
                advance();
            }
            if (pos_ >= text_.size()) {
                throw ParseError("unterminated string", t.line, t.column);
            }
            advance();  // closing quote
            t.kind = Token::Kind::string;
            t.text = std::move(value);
            return t;
        }
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            return lex_number(t);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_' || text_[pos_] == '.')) {
                word.push_back(text_[pos_]);
                advance();
            }
            t.kind = Token::Kind::key;
            t.text = std::move(word);
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token lex_number(Token t) {
        std::string word;
        bool is_real = false;
        if (text_[pos_] == '+' || text_[pos_] == '-') {
            word.push_back(text_[pos_]);
            advance();
        }
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                word.push_back(c);
            } else if (c == '.' || c == 'e' || c == 'E' || c == '+' || c == '-') {
                // exponent signs only make sense inside a real literal
                is_real = true;
                word.push_back(c);
            } else {
                break;
            }
            advance();
        }
        if (is_real) {
            t.kind = Token::Kind::real;
            t.text = std::move(word);
            return t;
        }
        std::int64_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(word.data(), word.data() + word.size(), value);
        if (ec != std::errc{} || ptr != word.data() + word.size()) {
            throw ParseError("malformed number '" + word + "'", t.line, t.column);
        }
        t.kind = Token::Kind::integer;
        t.text = std::move(word);
        t.int_value = value;
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class GmlParser {
public:
    explicit GmlParser(std::string_view text) : lexer_(text) { shift(); }

    LoadedGraph parse() {
        bool saw_graph = false;
        while (current_.kind != Token::Kind::end) {
            const Token key = expect_key("top-level key");
            if (key.text == "graph") {
                if (saw_graph) {
                    throw ParseError("multiple graph blocks", key.line, key.column);
                }
                expect(Token::Kind::lbracket, "'[' after graph");
                parse_graph_block();
                saw_graph = true;
            } else {
                skip_value(key);
            }
        }
        if (!saw_graph) {
            throw ParseError("missing graph block", current_.line, current_.column);
        }
        return build();
    }

private:
    struct RawEdge {
        std::int64_t source;
        std::int64_t target;
        int line;
        int column;
    };

    void shift() { current_ = lexer_.next(); }

    Token expect(Token::Kind kind, const std::string& what) {
        if (current_.kind != kind) {
            throw ParseError("expected " + what, current_.line, current_.column);
        }
        Token t = current_;
        shift();
        return t;
    }

    Token expect_key(const std::string& what) {
        if (current_.kind != Token::Kind::key) {
            throw ParseError("expected " + what, current_.line, current_.column);
        }
        Token t = current_;
        shift();
        return t;
    }

    // Consumes the value following a key we do not interpret: a scalar or a
    // bracketed list of key/value pairs, nested arbitrarily.
    void skip_value(const Token& key) {
        switch (current_.kind) {
            case Token::Kind::integer:
            case Token::Kind::real:
            case Token::Kind::string:
                shift();
                return;
            case Token::Kind::lbracket: {
                shift();
                while (current_.kind != Token::Kind::rbracket) {
                    const Token inner = expect_key("key inside block");
                    skip_value(inner);
                }
                shift();  // ']'
                return;
            }
            default:
                throw ParseError("missing value for key '" + key.text + "'",
                                 current_.line, current_.column);
        }
    }

    void parse_graph_block() {
        while (current_.kind != Token::Kind::rbracket) {
            if (current_.kind == Token::Kind::end) {
                throw ParseError("unterminated graph block", current_.line, current_.column);
            }
            const Token key = expect_key("key inside graph block");
            if (key.text == "node") {
                expect(Token::Kind::lbracket, "'[' after node");
                parse_node_block(key);
            } else if (key.text == "edge") {
                expect(Token::Kind::lbracket, "'[' after edge");
                parse_edge_block(key);
            } else if (key.text == "directed") {
                const Token value = expect(Token::Kind::integer, "integer after directed");
                if (value.int_value != 0) {
                    throw ParseError("directed graphs are not supported", value.line,
                                     value.column);
                }
            } else {
                skip_value(key);
            }
        }
        shift();  // ']'
    }

    void parse_node_block(const Token& node_key) {
        bool have_id = false;
        std::int64_t id = 0;
        while (current_.kind != Token::Kind::rbracket) {
            const Token key = expect_key("key inside node block");
            if (key.text == "id") {
                const Token value = expect(Token::Kind::integer, "integer node id");
                have_id = true;
                id = value.int_value;
                if (id_to_index_.count(id) != 0) {
                    throw ParseError("duplicate node id " + std::to_string(id), value.line,
                                     value.column);
                }
            } else {
                skip_value(key);
            }
        }
        shift();  // ']'
        if (!have_id) {
            throw ParseError("node block without id", node_key.line, node_key.column);
        }
        id_to_index_.emplace(id, static_cast<NodeId>(original_ids_.size()));
        original_ids_.push_back(id);
    }

    void parse_edge_block(const Token& edge_key) {
        bool have_source = false;
        bool have_target = false;
        std::int64_t source = 0;
        std::int64_t target = 0;
        while (current_.kind != Token::Kind::rbracket) {
            const Token key = expect_key("key inside edge block");
            if (key.text == "source") {
                source = expect(Token::Kind::integer, "integer edge source").int_value;
                have_source = true;
            } else if (key.text == "target") {
                target = expect(Token::Kind::integer, "integer edge target").int_value;
                have_target = true;
            } else if (key.text == "value" || key.text == "weight") {
                ++warnings_.ignored_weights;
                skip_value(key);
            } else {
                skip_value(key);
            }
        }
        shift();  // ']'
        if (!have_source || !have_target) {
            throw ParseError("edge block without source/target", edge_key.line,
                             edge_key.column);
        }
        raw_edges_.push_back({source, target, edge_key.line, edge_key.column});
    }

    LoadedGraph build() {
        if (original_ids_.empty()) {
            throw ParseError("graph has no nodes", 1, 1);
        }
        std::vector<Edge> edges;
        edges.reserve(raw_edges_.size());
        std::set<Edge> seen;
        for (const RawEdge& e : raw_edges_) {
            const auto su = id_to_index_.find(e.source);
            const auto tv = id_to_index_.find(e.target);
            if (su == id_to_index_.end()) {
                throw ParseError("edge references undeclared node " + std::to_string(e.source),
                                 e.line, e.column);
            }
            if (tv == id_to_index_.end()) {
                throw ParseError("edge references undeclared node " + std::to_string(e.target),
                                 e.line, e.column);
            }
            NodeId u = su->second;
            NodeId v = tv->second;
            if (u == v) {
                throw ParseError("self-loop on node " + std::to_string(e.source), e.line,
                                 e.column);
            }
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) {
                ++warnings_.duplicate_edges;
                continue;
            }
            edges.push_back({u, v});
        }
        return LoadedGraph{
            Graph::from_edges(static_cast<NodeId>(original_ids_.size()), std::move(edges)),
            std::move(original_ids_), warnings_};
    }

    GmlLexer lexer_;
    Token current_;
    std::unordered_map<std::int64_t, NodeId> id_to_index_;
    std::vector<std::int64_t> original_ids_;
    std::vector<RawEdge> raw_edges_;
    LoadWarnings warnings_;
};

}  // namespace

LoadedGraph parse_gml(std::string_view text) { return GmlParser(text).parse(); }

LoadedGraph parse_edge_list(std::string_view text) {
    std::unordered_map<std::int64_t, NodeId> id_to_index;
    std::vector<std::int64_t> original_ids;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    LoadWarnings warnings;

    const auto intern = [&](std::int64_t id) {
        const auto it = id_to_index.find(id);
        if (it != id_to_index.end()) return it->second;
        const NodeId idx = static_cast<NodeId>(original_ids.size());
        id_to_index.emplace(id, idx);
        original_ids.push_back(id);
        return idx;
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }

        std::vector<std::pair<std::string_view, int>> tokens;  // token, 1-based column
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i >= line.size()) break;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            tokens.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
        }
        if (!tokens.empty()) {
            if (tokens.size() != 2) {
                throw ParseError("expected two node ids per line, got " +
                                     std::to_string(tokens.size()) + " tokens",
                                 line_no, tokens.back().second);
            }
            std::int64_t ids[2];
            for (int k = 0; k < 2; ++k) {
                const auto [tok, col] = tokens[static_cast<std::size_t>(k)];
                const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), ids[k]);
                if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                    throw ParseError("non-integer token '" + std::string(tok) + "'", line_no,
                                     col);
                }
            }
            if (ids[0] == ids[1]) {
                throw ParseError("self-loop on node " + std::to_string(ids[0]), line_no,
                                 tokens[0].second);
            }
            NodeId u = intern(ids[0]);
            NodeId v = intern(ids[1]);
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) {
                ++warnings.duplicate_edges;
            } else {
                edges.push_back({u, v});
            }
        }
        if (eol >= text.size()) break;
        pos = eol + 1;
    }

    if (original_ids.empty()) {
        throw ParseError("graph has no nodes", line_no, 1);
    }
    return LoadedGraph{Graph::from_edges(static_cast<NodeId>(original_ids.size()), std::move(edges)),
                       std::move(original_ids), warnings};
}

std::string write_edge_list(const Graph& graph) {
    std::ostringstream os;
    for (const auto& [u, v] : graph.edges()) {
        os << u << ' ' << v << '\n';
    }
    return os.str();
}

LoadedGraph load_graph_file(const std::string& path, InputFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    return format == InputFormat::gml ? parse_gml(text) : parse_edge_list(text);
}

}  // namespace netclust
