#include "innerpost/postgroup.hpp"

#include <deque>

namespace innerpost {

PostGroup::PostGroup(FiniteGroup base, std::vector<Element> triangle)
    : base_(std::move(base)), triangle_(std::move(triangle)) {
    if (triangle_.size() != order() * order())
        throw std::invalid_argument("triangle table must have order^2 entries");
    for (Element x : triangle_)
        if (x >= order())
            throw std::invalid_argument("triangle table entry out of range");
}

GroupMap PostGroup::left_multiplication(Element a) const {
    GroupMap out(order());
    for (Element b = 0; b < order(); ++b)
        out[b] = act(a, b);
    return out;
}

PostGroupReport check_postgroup_axioms(const PostGroup& pg) {
    PostGroupReport report;
    const FiniteGroup& g = pg.base();
    const std::size_t n = g.order();
    for (Element a = 0; a < n; ++a)
        if (!is_bijection(pg.left_multiplication(a), n))
            report.violations.push_back({0, a});
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (pg.act(a, g.mul(b, c)) != g.mul(pg.act(a, b), pg.act(a, c)))
                    report.violations.push_back({1, a, b, c});
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = g.mul(a, pg.act(a, b));
            for (Element c = 0; c < n; ++c)
                if (pg.act(ab, c) != pg.act(a, pg.act(b, c)))
                    report.violations.push_back({2, a, b, c});
        }
    return report;
}

FiniteGroup sub_adjacent_group(const PostGroup& pg) {
    const FiniteGroup& g = pg.base();
    const std::size_t n = g.order();
    std::vector<Element> table(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            table[a * n + b] = g.mul(a, pg.act(a, b));
    return FiniteGroup(n, std::move(table), g.names());
}

bool check_rb_group(const FiniteGroup& g, const GroupMap& b) {
    const std::size_t n = g.order();
    if (b.size() != n)
        return false;
    for (Element x : b)
        if (x >= n)
            return false;
    for (Element x = 0; x < n; ++x) {
        const Element bx = b[x], bxi = g.inverse(bx);
        for (Element y = 0; y < n; ++y)
            if (g.mul(bx, b[y]) != b[g.mul(x, g.mul(g.mul(bx, y), bxi))])
                return false;
    }
    return true;
}

PostGroup from_adjoint_map_group(const FiniteGroup& g, const GroupMap& phi) {
    const std::size_t n = g.order();
    if (phi.size() != n)
        throw std::invalid_argument("map size differs from group order");
    std::vector<Element> triangle(n * n);
    for (Element a = 0; a < n; ++a) {
        const GroupMap ad = inner_automorphism(g, phi[a]);
        std::copy(ad.begin(), ad.end(), triangle.begin() + static_cast<std::ptrdiff_t>(a * n));
    }
    return PostGroup(g, std::move(triangle));
}

PostGroup from_rb_group(const FiniteGroup& g, const GroupMap& b) {
    if (!check_rb_group(g, b))
        throw std::invalid_argument("map is not a Rota-Baxter operator");
    return from_adjoint_map_group(g, b);
}

namespace {

// First c (by index) with Ad_c == L(a), if any.
std::vector<std::optional<Element>> smallest_conjugators(const PostGroup& pg, bool stop_at_first_outer) {
    const FiniteGroup& g = pg.base();
    const std::size_t n = g.order();
    std::vector<GroupMap> ads;
    for (Element c = 0; c < n; ++c)
        ads.push_back(inner_automorphism(g, c));
    std::vector<std::optional<Element>> out(n);
    for (Element a = 0; a < n; ++a) {
        const GroupMap l = pg.left_multiplication(a);
        for (Element c = 0; c < n && !out[a]; ++c)
            if (ads[c] == l)
                out[a] = c;
        if (!out[a] && stop_at_first_outer)
            break;
    }
    return out;
}

}  // namespace

std::optional<Element> first_outer_element(const PostGroup& pg) {
    const auto reps = smallest_conjugators(pg, true);
    for (Element a = 0; a < reps.size(); ++a)
        if (!reps[a])
            return a;
    return std::nullopt;
}

std::optional<GroupMap> innerness_witness_group(const PostGroup& pg) {
    const auto reps = smallest_conjugators(pg, true);
    GroupMap phi(pg.order());
    for (Element a = 0; a < reps.size(); ++a) {
        if (!reps[a])
            return std::nullopt;
        phi[a] = *reps[a];
    }
    if (pg.order() > 0)
        phi[pg.base().identity()] = pg.base().identity();
    return phi;
}

bool is_inner_witness_group(const PostGroup& pg, const GroupMap& phi) {
    const FiniteGroup& g = pg.base();
    if (phi.size() != g.order())
        return false;
    for (Element x : phi)
        if (x >= g.order())
            return false;
    if (phi[g.identity()] != g.identity())
        return false;
    for (Element a = 0; a < g.order(); ++a)
        if (inner_automorphism(g, phi[a]) != pg.left_multiplication(a))
            return false;
    return true;
}

namespace {

class RbSearch {
public:
    RbSearch(const FiniteGroup& g, std::size_t cap) : g_(g), n_(g.order()), cap_(cap), value_(n_, unset) {}

    std::vector<GroupMap> run() {
        search();
        return std::move(found_);
    }

private:
    static constexpr Element unset = static_cast<Element>(-1);

    // x * Ad_{B(x)} y
    Element twisted(Element x, Element y) const {
        const Element bx = value_[x];
        return g_.mul(x, g_.mul(g_.mul(bx, y), g_.inverse(bx)));
    }

    bool check_pair(Element x, Element y, std::deque<Element>& queue) {
        const Element c = twisted(x, y);
        const Element target = g_.mul(value_[x], value_[y]);
        if (value_[c] == unset) {
            assign(c, target);
            queue.push_back(c);
            return true;
        }
        return value_[c] == target;
    }

    void assign(Element x, Element v) {
        value_[x] = v;
        trail_.push_back(x);
    }

    bool propagate(Element start) {
        std::deque<Element> queue{start};
        while (!queue.empty()) {
            const Element y = queue.front();
            queue.pop_front();
            for (Element x = 0; x < n_; ++x) {
                if (value_[x] == unset)
                    continue;
                if (!check_pair(y, x, queue))
                    return false;
                if (x != y && value_[x] != unset && !check_pair(x, y, queue))
                    return false;
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            value_[trail_.back()] = unset;
            trail_.pop_back();
        }
    }

    void search() {
        Element x = 0;
        while (x < n_ && value_[x] != unset)
            ++x;
        if (x == n_) {
            found_.push_back(value_);
            return;
        }
        for (Element v = 0; v < n_; ++v) {
            if (++nodes_ > cap_)
                throw EnumerationCapExceeded("Rota-Baxter enumeration exceeded the search budget of " +
                                             std::to_string(cap_) + " nodes");
            const std::size_t mark = trail_.size();
            assign(x, v);
            if (propagate(x))
                search();
            undo(mark);
        }
    }

    const FiniteGroup& g_;
    std::size_t n_;
    std::size_t cap_;
    std::size_t nodes_ = 0;
    std::vector<Element> value_;
    std::vector<Element> trail_;
    std::vector<GroupMap> found_;
};

}  // namespace

std::vector<GroupMap> enumerate_rb_operators(const FiniteGroup& g, std::size_t cap) {
    if (!check_group(g))
        throw std::invalid_argument("enumeration requires a valid group");
    return RbSearch(g, cap).run();
}

}  // namespace innerpost
