#include "innerpost/group.hpp"

#include "innerpost/matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace innerpost {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
    if (table_.size() != order_ * order_)
        throw std::invalid_argument("Cayley table must have order^2 entries");
    for (Element x : table_)
        if (x >= order_)
            throw std::invalid_argument("Cayley table entry out of range");
    if (!names_.empty() && names_.size() != order_)
        throw std::invalid_argument("need one name per element");

    for (Element e = 0; e < order_ && !identity_; ++e) {
        bool ok = true;
        for (Element a = 0; a < order_ && ok; ++a)
            ok = mul(e, a) == a && mul(a, e) == a;
        if (ok)
            identity_ = e;
    }
    if (!identity_)
        return;
    inverse_.assign(order_, order_);
    inverses_ok_ = true;
    for (Element a = 0; a < order_; ++a) {
        for (Element b = 0; b < order_; ++b)
            if (mul(a, b) == *identity_ && mul(b, a) == *identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] == order_)
            inverses_ok_ = false;
    }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    std::vector<Element> table(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            table[a * n + b] = (a + b) % n;
    return FiniteGroup(n, std::move(table));
}

std::string FiniteGroup::name(Element a) const {
    return names_.empty() ? std::to_string(a) : names_.at(a);
}

std::optional<GroupViolation> find_group_violation(const FiniteGroup& g) {
    const std::size_t n = g.order();
    if (n == 0)
        return GroupViolation{"empty group"};
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = g.mul(a, b);
            for (Element c = 0; c < n; ++c)
                if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
                    return GroupViolation{"associativity", a, b, c};
        }
    if (!g.has_identity())
        return GroupViolation{"no identity element"};
    if (!g.has_inverses()) {
        for (Element a = 0; a < n; ++a) {
            bool found = false;
            for (Element b = 0; b < n && !found; ++b)
                found = g.mul(a, b) == g.identity() && g.mul(b, a) == g.identity();
            if (!found)
                return GroupViolation{"no inverse", a};
        }
    }
    return std::nullopt;
}

bool check_group(const FiniteGroup& g) { return !find_group_violation(g).has_value(); }

std::vector<Element> center_group(const FiniteGroup& g) {
    std::vector<Element> out;
    for (Element z = 0; z < g.order(); ++z) {
        bool central = true;
        for (Element a = 0; a < g.order() && central; ++a)
            central = g.mul(z, a) == g.mul(a, z);
        if (central)
            out.push_back(z);
    }
    return out;
}

GroupMap inner_automorphism(const FiniteGroup& g, Element c) {
    GroupMap out(g.order());
    const Element ci = g.inverse(c);
    for (Element b = 0; b < g.order(); ++b)
        out[b] = g.mul(g.mul(c, b), ci);
    return out;
}

bool is_group_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const GroupMap& f) {
    if (f.size() != from.order())
        return false;
    for (Element a = 0; a < from.order(); ++a)
        for (Element b = 0; b < from.order(); ++b)
            if (f[from.mul(a, b)] != to.mul(f[a], f[b]))
                return false;
    return true;
}

bool is_bijection(const GroupMap& f, std::size_t order) {
    if (f.size() != order)
        return false;
    std::vector<bool> hit(order, false);
    for (Element x : f) {
        if (x >= order || hit[x])
            return false;
        hit[x] = true;
    }
    return true;
}

// ---------------------------------------------------------------------------

Element AbelianDecomposition::from_coords(const Coords& c) const {
    const auto it = elements_by_coords_.find(c);
    if (it == elements_by_coords_.end())
        throw std::out_of_range("coordinates out of range");
    return it->second;
}

AbelianDecomposition::Coords AbelianDecomposition::add(const Coords& a, const Coords& b) const {
    Coords out(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j)
        out[j] = (a[j] + b[j]) % factors_[j];
    return out;
}

AbelianDecomposition::Coords AbelianDecomposition::negate(const Coords& a) const {
    Coords out(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j)
        out[j] = (factors_[j] - a[j]) % factors_[j];
    return out;
}

AbelianDecomposition abelian_decomposition(const FiniteGroup& g, std::span<const Element> subset) {
    std::set<Element> members(subset.begin(), subset.end());
    if (members.empty())
        throw std::invalid_argument("subgroup must be nonempty");
    for (Element x : members)
        if (x >= g.order())
            throw std::invalid_argument("element out of range");
    if (!members.count(g.identity()))
        throw std::invalid_argument("subset does not contain the identity");
    for (Element a : members)
        for (Element b : members) {
            if (!members.count(g.mul(a, b)))
                throw std::invalid_argument("subset is not closed under the group law");
            if (g.mul(a, b) != g.mul(b, a))
                throw std::invalid_argument("subset is not commutative");
        }

    const Element e = g.identity();
    auto power = [&](Element x, std::size_t k) {
        Element acc = e;
        for (std::size_t i = 0; i < k; ++i)
            acc = g.mul(acc, x);
        return acc;
    };

    // Greedy generating set in index order.
    std::vector<Element> gens;
    std::vector<std::size_t> orders;
    std::set<Element> span{e};
    for (Element x : members) {
        if (span.count(x))
            continue;
        std::size_t ord = 1;
        while (power(x, ord) != e)
            ++ord;
        gens.push_back(x);
        orders.push_back(ord);
        std::set<Element> grown;
        for (Element s : span)
            for (std::size_t k = 0; k < ord; ++k)
                grown.insert(g.mul(s, power(x, k)));
        span = std::move(grown);
    }

    AbelianDecomposition out;
    out.identity_ = e;
    out.elements_.assign(members.begin(), members.end());
    const std::size_t k = gens.size();
    if (k == 0) {
        out.coords_[e] = {};
        out.elements_by_coords_[{}] = e;
        return out;
    }

    // Walk the exponent box; every box vector hitting e is a relation, and
    // together with ord_i * e_i these generate the relation lattice.
    std::vector<std::vector<long>> relations;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<long> r(k, 0);
        r[i] = static_cast<long>(orders[i]);
        relations.push_back(std::move(r));
    }
    std::map<Element, std::vector<long>> first_hit;
    std::vector<std::size_t> exps(k, 0);
    for (;;) {
        Element x = e;
        for (std::size_t i = 0; i < k; ++i)
            x = g.mul(x, power(gens[i], exps[i]));
        std::vector<long> v(exps.begin(), exps.end());
        if (x == e && std::any_of(exps.begin(), exps.end(), [](std::size_t t) { return t != 0; }))
            relations.push_back(v);
        first_hit.emplace(x, std::move(v));
        std::size_t pos = 0;
        while (pos < k && ++exps[pos] == orders[pos])
            exps[pos++] = 0;
        if (pos == k)
            break;
    }

    const SmithForm snf = smith_normal_form(IntMatrix::from_rows(relations));
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < k; ++i) {
        const mpz_class& s = snf.d(i, i);
        if (s == 0)
            throw std::logic_error("relation lattice has infinite quotient");
        if (s != 1) {
            kept.push_back(i);
            out.factors_.push_back(s.get_ui());
        }
    }
    for (const auto& [x, v] : first_hit) {
        AbelianDecomposition::Coords c;
        for (std::size_t idx = 0; idx < kept.size(); ++idx) {
            const std::size_t col = kept[idx];
            mpz_class acc = 0;
            for (std::size_t r = 0; r < k; ++r)
                acc += v[r] * snf.v(r, col);
            mpz_class red;
            mpz_fdiv_r(red.get_mpz_t(), acc.get_mpz_t(), snf.d(col, col).get_mpz_t());
            c.push_back(red.get_ui());
        }
        out.coords_[x] = c;
        if (!out.elements_by_coords_.emplace(c, x).second)
            throw std::logic_error("abelian decomposition is not injective");
    }
    if (out.coords_.size() != members.size())
        throw std::logic_error("abelian decomposition does not cover the subgroup");
    return out;
}

}  // namespace innerpost
