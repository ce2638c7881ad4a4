#include "innerpost/document.hpp"

#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace innerpost {

ParseError::ParseError(Category category, std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      category_(category),
      line_(line),
      message_(message) {}

const char* to_string(ParseError::Category c) {
    switch (c) {
    case ParseError::Category::syntax:
        return "syntax";
    case ParseError::Category::dimension:
        return "dimension";
    case ParseError::Category::invariant:
        return "invariant";
    }
    return "unknown";
}

const char* kind_name(const Document& doc) {
    static const char* names[] = {"lie", "postlie", "rb-lie", "group", "postgroup", "rb-group"};
    return names[doc.index()];
}

// ---------------------------------------------------------------------------
// Linear combinations

namespace {

class ExprReader {
public:
    ExprReader(std::string_view text, std::size_t dim) : dim_(dim) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s_.push_back(c);
    }

    Vector read() {
        Vector out(dim_);
        if (s_ == "0")
            return out;
        if (s_.empty())
            throw std::invalid_argument("empty expression");
        bool first = true;
        while (pos_ < s_.size()) {
            GaussianRational sign(1);
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-')
                    sign = GaussianRational(-1);
                ++pos_;
            } else if (!first) {
                throw std::invalid_argument("expected '+' or '-' at '" + s_.substr(pos_) + "'");
            }
            first = false;
            const GaussianRational coef = sign * coefficient();
            const std::size_t k = basis_index();
            out[k] += coef;
        }
        return out;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c)
            throw std::invalid_argument(std::string("expected '") + c + "' at '" + s_.substr(pos_) + "'");
        ++pos_;
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            throw std::invalid_argument("expected a number at '" + s_.substr(pos_) + "'");
        return s_.substr(start, pos_ - start);
    }

    GaussianRational coefficient() {
        if (peek() == 'e')
            return GaussianRational(1);
        if (peek() == '(') {
            const std::size_t close = s_.find(')', pos_);
            if (close == std::string::npos)
                throw std::invalid_argument("unbalanced '('");
            const GaussianRational c = GaussianRational::parse(s_.substr(pos_ + 1, close - pos_ - 1));
            pos_ = close + 1;
            expect('*');
            return c;
        }
        if (peek() == 'i') {
            ++pos_;
            mpq_class im = 1;
            if (peek() == '/') {
                ++pos_;
                const mpz_class den(digits());
                if (den == 0)
                    throw std::invalid_argument("zero denominator");
                im = mpq_class(1, den);
            }
            expect('*');
            return GaussianRational(0, im);
        }
        std::string number = digits();
        if (peek() == '/') {
            ++pos_;
            number += "/" + digits();
        }
        GaussianRational c = GaussianRational::parse(number);
        expect('*');
        if (peek() == 'i') {
            ++pos_;
            expect('*');
            c = c * GaussianRational::i();
        }
        return c;
    }

    std::size_t basis_index() {
        expect('e');
        const std::string d = digits();
        const unsigned long k = std::stoul(d);
        if (k == 0 || k > dim_)
            throw std::out_of_range("basis vector e" + d + " outside dimension " + std::to_string(dim_));
        return k - 1;
    }

    std::string s_;
    std::size_t pos_ = 0;
    std::size_t dim_;
};

std::string render_term(const GaussianRational& c, std::size_t k, bool& negative) {
    const std::string e = "e" + std::to_string(k + 1);
    if (c.is_real()) {
        negative = c.re() < 0;
        const mpq_class a = abs(c.re());
        return a == 1 ? e : a.get_str() + "*" + e;
    }
    if (c.re() == 0) {
        negative = c.im() < 0;
        const mpq_class a = abs(c.im());
        return a == 1 ? "i*" + e : a.get_str() + "*i*" + e;
    }
    negative = false;
    return "(" + c.to_string() + ")*" + e;
}

}  // namespace

Vector parse_vector(std::string_view text, std::size_t dim) { return ExprReader(text, dim).read(); }

std::string render_vector(const Vector& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        bool negative = false;
        const std::string body = render_term(v[k], k, negative);
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Permutation groups

FiniteGroup expand_permutation_generators(std::size_t degree, const std::vector<std::vector<std::size_t>>& gens,
                                          std::size_t cap) {
    using Perm = std::vector<std::size_t>;
    for (const Perm& p : gens) {
        if (p.size() != degree)
            throw std::invalid_argument("generator has " + std::to_string(p.size()) + " points, expected " +
                                        std::to_string(degree));
        std::set<std::size_t> seen(p.begin(), p.end());
        if (seen.size() != degree || (degree > 0 && *seen.rbegin() >= degree))
            throw std::invalid_argument("generator is not a permutation");
    }
    auto compose = [](const Perm& a, const Perm& b) {
        Perm out(b.size());
        for (std::size_t x = 0; x < b.size(); ++x)
            out[x] = a[b[x]];
        return out;
    };
    Perm id(degree);
    for (std::size_t x = 0; x < degree; ++x)
        id[x] = x;
    std::vector<Perm> elements{id};
    std::map<Perm, Element> index{{id, 0}};
    std::deque<Element> queue{0};
    while (!queue.empty()) {
        const Element cur = queue.front();
        queue.pop_front();
        for (const Perm& g : gens) {
            Perm next = compose(elements[cur], g);
            if (index.count(next))
                continue;
            if (elements.size() >= cap)
                throw std::length_error("permutation closure exceeds " + std::to_string(cap) + " elements");
            index.emplace(next, elements.size());
            queue.push_back(elements.size());
            elements.push_back(std::move(next));
        }
    }
    const std::size_t n = elements.size();
    std::vector<Element> table(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            table[a * n + b] = index.at(compose(elements[a], elements[b]));
    return FiniteGroup(n, std::move(table));
}

// ---------------------------------------------------------------------------
// Documents

namespace {

using Category = ParseError::Category;

struct Line {
    std::size_t number;
    std::string text;
};

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0, start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        ++number;
        std::string line(text.substr(start, end - start));
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (!line.empty())
            out.push_back({number, line});
        if (end == text.size())
            break;
        start = end + 1;
    }
    return out;
}

std::size_t parse_count(const Line& line, const std::string& token) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(Category::syntax, line.number, "expected a non-negative integer, got '" + token + "'");
    return std::stoul(token);
}

struct Block {
    std::string name;
    std::size_t line = 0;
    std::vector<Line> lines;
};

Vector expression(const Line& line, const std::string& text, std::size_t dim) {
    try {
        return parse_vector(text, dim);
    } catch (const std::out_of_range& e) {
        throw ParseError(Category::dimension, line.number, e.what());
    } catch (const std::exception& e) {
        throw ParseError(Category::syntax, line.number, e.what());
    }
}

GaussianRational scalar(const Line& line, const std::string& token) {
    try {
        return GaussianRational::parse(token);
    } catch (const std::exception& e) {
        throw ParseError(Category::syntax, line.number, "bad scalar '" + token + "': " + e.what());
    }
}

LinearMap linear_map_block(const Block& block, std::size_t dim) {
    static const std::regex arrow(R"(e(\d+)\s*->\s*(.*))");
    if (block.lines.empty())
        throw ParseError(Category::syntax, block.line, "empty '" + block.name + "' block");
    std::smatch m;
    const bool arrows = std::regex_match(block.lines.front().text, m, arrow);
    ExactMatrix mat(dim, dim);
    if (arrows) {
        std::set<std::size_t> seen;
        for (const Line& line : block.lines) {
            if (!std::regex_match(line.text, m, arrow))
                throw ParseError(Category::syntax, line.number, "expected 'eK -> expression'");
            const std::size_t k = parse_count(line, m[1].str());
            if (k == 0 || k > dim)
                throw ParseError(Category::dimension, line.number, "basis vector e" + m[1].str() + " outside dimension " + std::to_string(dim));
            if (!seen.insert(k).second)
                throw ParseError(Category::syntax, line.number, "image of e" + m[1].str() + " given twice");
            const Vector v = expression(line, m[2].str(), dim);
            for (std::size_t r = 0; r < dim; ++r)
                mat(r, k - 1) = v[r];
        }
        return LinearMap(std::move(mat));
    }
    if (block.lines.size() != dim)
        throw ParseError(Category::dimension, block.lines.back().number,
                         "'" + block.name + "' matrix needs " + std::to_string(dim) + " rows, got " +
                             std::to_string(block.lines.size()));
    for (std::size_t r = 0; r < dim; ++r) {
        const Line& line = block.lines[r];
        const auto row = tokens(line.text);
        if (row.size() != dim)
            throw ParseError(Category::dimension, line.number,
                             "matrix row needs " + std::to_string(dim) + " entries, got " + std::to_string(row.size()));
        for (std::size_t c = 0; c < dim; ++c)
            mat(r, c) = scalar(line, row[c]);
    }
    return LinearMap(std::move(mat));
}

Document parse_lie_kind(const std::string& kind, const std::vector<Line>& lines) {
    static const std::regex bracket_re(R"(\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=\s*(.*))");
    static const std::regex triangle_re(R"((\d+)\s*>\s*(\d+)\s*=\s*(.*))");
    std::optional<std::size_t> dim;
    LieAlgebra::BracketTable brackets;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> bracket_line;
    std::map<std::pair<std::size_t, std::size_t>, Vector> triangle;
    std::optional<Block> block;
    std::vector<Block> blocks;
    const std::string map_keyword = kind == "rb-lie" ? "R" : "phi";

    auto close_block = [&] {
        if (block)
            blocks.push_back(std::move(*block));
        block.reset();
    };
    auto index_pair = [&](const Line& line, const std::smatch& m) {
        const std::size_t i = parse_count(line, m[1].str()), j = parse_count(line, m[2].str());
        if (i == 0 || j == 0 || i > *dim || j > *dim)
            throw ParseError(Category::dimension, line.number, "index outside dimension " + std::to_string(*dim));
        return std::pair{i - 1, j - 1};
    };

    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        const Line& line = lines[idx];
        const auto tok = tokens(line.text);
        std::smatch m;
        if (tok[0] == "dim") {
            close_block();
            if (dim)
                throw ParseError(Category::syntax, line.number, "'dim' given twice");
            if (tok.size() != 2)
                throw ParseError(Category::syntax, line.number, "expected 'dim N'");
            dim = parse_count(line, tok[1]);
            if (*dim == 0)
                throw ParseError(Category::dimension, line.number, "dimension must be positive");
            continue;
        }
        if (!dim)
            throw ParseError(Category::syntax, line.number, "expected 'dim N' before content");
        if (tok.size() == 1 && (tok[0] == "R" || tok[0] == "phi")) {
            close_block();
            if (tok[0] != map_keyword || kind == "lie")
                throw ParseError(Category::syntax, line.number, "'" + tok[0] + "' block not allowed in kind " + kind);
            for (const Block& b : blocks)
                if (b.name == tok[0])
                    throw ParseError(Category::syntax, line.number, "'" + tok[0] + "' block given twice");
            block = Block{tok[0], line.number, {}};
            continue;
        }
        if (std::regex_match(line.text, m, bracket_re)) {
            close_block();
            const auto [i, j] = index_pair(line, m);
            const Vector v = expression(line, m[3].str(), *dim);
            if (i == j) {
                if (!is_zero(v))
                    throw ParseError(Category::invariant, line.number,
                                     "antisymmetry: [e" + std::to_string(i + 1) + ",e" + std::to_string(i + 1) + "] must be 0");
                continue;
            }
            const auto key = i < j ? std::pair{i, j} : std::pair{j, i};
            const Vector oriented = i < j ? v : GaussianRational(-1) * v;
            if (auto it = brackets.find(key); it != brackets.end()) {
                if (it->second != oriented)
                    throw ParseError(Category::invariant, line.number,
                                     "antisymmetry: conflicts with the bracket on line " +
                                         std::to_string(bracket_line[key]));
                continue;
            }
            brackets[key] = oriented;
            bracket_line[key] = line.number;
            continue;
        }
        if (std::regex_match(line.text, m, triangle_re)) {
            close_block();
            if (kind != "postlie")
                throw ParseError(Category::syntax, line.number, "triangle products only allowed in kind postlie");
            const auto key = index_pair(line, m);
            if (triangle.count(key))
                throw ParseError(Category::syntax, line.number, "product given twice");
            triangle[key] = expression(line, m[3].str(), *dim);
            continue;
        }
        if (block) {
            block->lines.push_back(line);
            continue;
        }
        throw ParseError(Category::syntax, line.number, "unrecognized line '" + line.text + "'");
    }
    close_block();
    const std::size_t last = lines.back().number;
    if (!dim)
        throw ParseError(Category::syntax, last, "missing 'dim N'");

    LieAlgebra lie(*dim, brackets);
    std::optional<LinearMap> map;
    for (const Block& b : blocks)
        map = linear_map_block(b, *dim);

    if (kind == "lie")
        return LieDocument{lie};
    if (kind == "rb-lie") {
        if (!map)
            throw ParseError(Category::syntax, last, "kind rb-lie needs an 'R' block");
        return RbLieDocument{lie, *map};
    }
    std::vector<Vector> products(*dim * *dim, Vector(*dim));
    for (const auto& [key, v] : triangle)
        products[key.first * *dim + key.second] = v;
    return PostLieDocument{PostLieAlgebra(lie, std::move(products)), map};
}

class GroupReader {
public:
    explicit GroupReader(std::string kind) : kind_(std::move(kind)) {}

    Document parse(const std::vector<Line>& lines) {
        std::optional<Block> block;
        auto close_block = [&] {
            if (block)
                blocks_.push_back(std::move(*block));
            block.reset();
        };
        for (std::size_t idx = 1; idx < lines.size(); ++idx) {
            const Line& line = lines[idx];
            const auto tok = tokens(line.text);
            const std::string& key = tok[0];
            if (key == "order" || key == "degree") {
                close_block();
                if (tok.size() != 2)
                    throw ParseError(Category::syntax, line.number, "expected '" + key + " N'");
                auto& slot = key == "order" ? order_ : degree_;
                if (slot)
                    throw ParseError(Category::syntax, line.number, "'" + key + "' given twice");
                slot = parse_count(line, tok[1]);
                header_line_ = line.number;
            } else if (key == "gen") {
                close_block();
                gen_lines_.push_back(line);
            } else if (key == "names") {
                close_block();
                if (!names_.empty())
                    throw ParseError(Category::syntax, line.number, "'names' given twice");
                names_.assign(tok.begin() + 1, tok.end());
                names_line_ = line.number;
                if (names_.empty())
                    throw ParseError(Category::syntax, line.number, "'names' needs at least one name");
            } else if (tok.size() == 1 && (key == "table" || key == "triangle" || key == "phi" || key == "B")) {
                close_block();
                check_block_allowed(line, key);
                block = Block{key, line.number, {}};
            } else if (block) {
                block->lines.push_back(line);
            } else {
                throw ParseError(Category::syntax, line.number, "unrecognized line '" + line.text + "'");
            }
        }
        close_block();
        last_line_ = lines.back().number;
        return build();
    }

private:
    void check_block_allowed(const Line& line, const std::string& key) {
        const bool ok = key == "table" || (key == "triangle" && kind_ == "postgroup") ||
                        (key == "phi" && kind_ == "postgroup") || (key == "B" && kind_ == "rb-group");
        if (!ok)
            throw ParseError(Category::syntax, line.number, "'" + key + "' block not allowed in kind " + kind_);
        for (const Block& b : blocks_)
            if (b.name == key)
                throw ParseError(Category::syntax, line.number, "'" + key + "' block given twice");
    }

    const Block* find_block(const std::string& name) const {
        for (const Block& b : blocks_)
            if (b.name == name)
                return &b;
        return nullptr;
    }

    Element element(const Line& line, const std::string& token) const {
        for (Element k = 0; k < names_.size(); ++k)
            if (names_[k] == token)
                return k;
        if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError(Category::syntax, line.number, "unknown element '" + token + "'");
        const std::size_t k = std::stoul(token);
        if (k >= n_)
            throw ParseError(Category::dimension, line.number,
                             "element " + token + " outside group of order " + std::to_string(n_));
        return k;
    }

    std::vector<Element> square_table(const Block& block) const {
        if (block.lines.size() != n_)
            throw ParseError(Category::dimension, block.lines.empty() ? block.line : block.lines.back().number,
                             "'" + block.name + "' needs " + std::to_string(n_) + " rows, got " +
                                 std::to_string(block.lines.size()));
        std::vector<Element> out;
        for (const Line& line : block.lines) {
            const auto row = tokens(line.text);
            if (row.size() != n_)
                throw ParseError(Category::dimension, line.number,
                                 "row needs " + std::to_string(n_) + " entries, got " + std::to_string(row.size()));
            for (const auto& t : row)
                out.push_back(element(line, t));
        }
        return out;
    }

    GroupMap map_block(const Block& block) const {
        static const std::regex arrow(R"((\S+)\s*->\s*(\S+))");
        if (block.lines.empty())
            throw ParseError(Category::syntax, block.line, "empty '" + block.name + "' block");
        std::smatch m;
        if (!std::regex_match(block.lines.front().text, m, arrow)) {
            if (block.lines.size() != 1)
                throw ParseError(Category::syntax, block.lines[1].number, "map given as a row takes a single line");
            const Line& line = block.lines.front();
            const auto row = tokens(line.text);
            if (row.size() != n_)
                throw ParseError(Category::dimension, line.number,
                                 "map row needs " + std::to_string(n_) + " entries, got " + std::to_string(row.size()));
            GroupMap out;
            for (const auto& t : row)
                out.push_back(element(line, t));
            return out;
        }
        GroupMap out(n_, n_);
        for (const Line& line : block.lines) {
            if (!std::regex_match(line.text, m, arrow))
                throw ParseError(Category::syntax, line.number, "expected 'a -> b'");
            const Element a = element(line, m[1].str());
            if (out[a] != n_)
                throw ParseError(Category::syntax, line.number, "image of " + m[1].str() + " given twice");
            out[a] = element(line, m[2].str());
        }
        for (Element a = 0; a < n_; ++a)
            if (out[a] == n_)
                throw ParseError(Category::dimension, block.lines.back().number,
                                 "map misses element " + (names_.empty() ? std::to_string(a) : names_[a]));
        return out;
    }

    FiniteGroup build_group() {
        if (order_ && degree_)
            throw ParseError(Category::syntax, header_line_, "give either 'order' or 'degree', not both");
        const Block* table = find_block("table");
        if (degree_) {
            if (table)
                throw ParseError(Category::syntax, table->line, "'table' not allowed with permutation generators");
            std::vector<std::vector<std::size_t>> gens;
            for (const Line& line : gen_lines_) {
                const auto tok = tokens(line.text);
                std::vector<std::size_t> p;
                for (std::size_t k = 1; k < tok.size(); ++k)
                    p.push_back(parse_count(line, tok[k]));
                try {
                    expand_permutation_generators(*degree_, {p}, 1u << 20);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(Category::invariant, line.number, e.what());
                }
                gens.push_back(std::move(p));
            }
            FiniteGroup g;
            try {
                g = expand_permutation_generators(*degree_, gens);
            } catch (const std::length_error& e) {
                throw ParseError(Category::dimension, header_line_, e.what());
            }
            n_ = g.order();
            if (!names_.empty() && names_.size() != n_)
                throw ParseError(Category::dimension, names_line_,
                                 "need " + std::to_string(n_) + " names, got " + std::to_string(names_.size()));
            return FiniteGroup(n_, g.table(), names_);
        }
        if (!gen_lines_.empty())
            throw ParseError(Category::syntax, gen_lines_.front().number, "'gen' needs 'degree N'");
        if (!order_)
            throw ParseError(Category::syntax, last_line_, "missing 'order N' or 'degree N'");
        if (*order_ == 0)
            throw ParseError(Category::dimension, header_line_, "order must be positive");
        n_ = *order_;
        if (!names_.empty()) {
            if (names_.size() != n_)
                throw ParseError(Category::dimension, names_line_,
                                 "need " + std::to_string(n_) + " names, got " + std::to_string(names_.size()));
            if (std::set<std::string>(names_.begin(), names_.end()).size() != n_)
                throw ParseError(Category::syntax, names_line_, "element names must be distinct");
        }
        if (!table)
            throw ParseError(Category::syntax, last_line_, "missing 'table' block");
        FiniteGroup g(n_, square_table(*table), names_);
        if (const auto v = find_group_violation(g)) {
            std::size_t at = table->line;
            std::string msg = v->what;
            if (v->what == "associativity") {
                at = table->lines[v->a].number;
                msg += " fails: (" + g.name(v->a) + " " + g.name(v->b) + ") " + g.name(v->c) + " != " + g.name(v->a) +
                       " (" + g.name(v->b) + " " + g.name(v->c) + ")";
            } else if (v->what == "no inverse") {
                at = table->lines[v->a].number;
                msg += " for " + g.name(v->a);
            }
            throw ParseError(Category::invariant, at, msg);
        }
        return g;
    }

    Document build() {
        FiniteGroup g = build_group();
        if (kind_ == "group")
            return GroupDocument{g};
        if (kind_ == "rb-group") {
            const Block* b = find_block("B");
            if (!b)
                throw ParseError(Category::syntax, last_line_, "kind rb-group needs a 'B' block");
            return RbGroupDocument{g, map_block(*b)};
        }
        const Block* tri = find_block("triangle");
        if (!tri)
            throw ParseError(Category::syntax, last_line_, "kind postgroup needs a 'triangle' block");
        std::optional<GroupMap> phi;
        if (const Block* p = find_block("phi"))
            phi = map_block(*p);
        return PostGroupDocument{PostGroup(g, square_table(*tri)), phi};
    }

    std::string kind_;
    std::optional<std::size_t> order_, degree_;
    std::size_t header_line_ = 0, names_line_ = 0, last_line_ = 0;
    std::vector<Line> gen_lines_;
    std::vector<std::string> names_;
    std::vector<Block> blocks_;
    std::size_t n_ = 0;
};

}  // namespace

Document parse_document(std::string_view text) {
    const std::vector<Line> lines = split_lines(text);
    if (lines.empty())
        throw ParseError(Category::syntax, 1, "empty document");
    const auto head = tokens(lines.front().text);
    if (head.size() != 2 || head[0] != "kind")
        throw ParseError(Category::syntax, lines.front().number, "expected 'kind <lie|postlie|rb-lie|group|postgroup|rb-group>'");
    const std::string& kind = head[1];
    if (kind == "lie" || kind == "postlie" || kind == "rb-lie")
        return parse_lie_kind(kind, lines);
    if (kind == "group" || kind == "postgroup" || kind == "rb-group")
        return GroupReader(kind).parse(lines);
    throw ParseError(Category::syntax, lines.front().number, "unknown kind '" + kind + "'");
}

Document load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

void render_lie(std::ostream& out, const LieAlgebra& lie) {
    const std::size_t n = lie.dim();
    out << "dim " << n << "\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!is_zero(lie.bracket_basis(i, j)))
                out << "[" << i + 1 << "," << j + 1 << "] = " << render_vector(lie.bracket_basis(i, j)) << "\n";
}

void render_map(std::ostream& out, const std::string& name, const LinearMap& map) {
    out << name << "\n";
    for (std::size_t j = 0; j < map.dim(); ++j)
        out << "e" << j + 1 << " -> " << render_vector(map.image(j)) << "\n";
}

void render_group(std::ostream& out, const FiniteGroup& g) {
    out << "order " << g.order() << "\n";
    if (!g.names().empty()) {
        out << "names";
        for (const auto& name : g.names())
            out << " " << name;
        out << "\n";
    }
    out << "table\n";
    for (Element a = 0; a < g.order(); ++a) {
        for (Element b = 0; b < g.order(); ++b)
            out << (b ? " " : "") << g.name(g.mul(a, b));
        out << "\n";
    }
}

void render_group_map(std::ostream& out, const std::string& name, const FiniteGroup& g, const GroupMap& f) {
    out << name << "\n";
    for (Element a = 0; a < f.size(); ++a)
        out << (a ? " " : "") << g.name(f[a]);
    out << "\n";
}

}  // namespace

std::string render_document(const Document& doc) {
    std::ostringstream out;
    out << "kind " << kind_name(doc) << "\n";
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, LieDocument>) {
                render_lie(out, d.lie);
            } else if constexpr (std::is_same_v<T, PostLieDocument>) {
                render_lie(out, d.post.base());
                const std::size_t n = d.post.dim();
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (!is_zero(d.post.product_basis(i, j)))
                            out << i + 1 << ">" << j + 1 << " = " << render_vector(d.post.product_basis(i, j)) << "\n";
                if (d.phi)
                    render_map(out, "phi", *d.phi);
            } else if constexpr (std::is_same_v<T, RbLieDocument>) {
                render_lie(out, d.lie);
                render_map(out, "R", d.r);
            } else if constexpr (std::is_same_v<T, GroupDocument>) {
                render_group(out, d.group);
            } else if constexpr (std::is_same_v<T, PostGroupDocument>) {
                const FiniteGroup& g = d.post.base();
                render_group(out, g);
                out << "triangle\n";
                for (Element a = 0; a < g.order(); ++a) {
                    for (Element b = 0; b < g.order(); ++b)
                        out << (b ? " " : "") << g.name(d.post.act(a, b));
                    out << "\n";
                }
                if (d.phi)
                    render_group_map(out, "phi", g, *d.phi);
            } else {
                render_group(out, d.group);
                render_group_map(out, "B", d.group, d.b);
            }
        },
        doc);
    return out.str();
}

}  // namespace innerpost
