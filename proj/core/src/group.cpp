#include "tww/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tww/errors.hpp"

namespace tww {

std::string GroupOracle::describe(const Elem& e) const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << ')';
    return os.str();
}

namespace {

using Elem = GroupOracle::Elem;

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

class ZdGroup final : public GroupOracle {
public:
    explicit ZdGroup(int d) : d_(d) {
        if (d < 1) throw ArgumentError("Z^d needs d >= 1");
    }
    Elem identity() const override { return Elem(static_cast<std::size_t>(d_), 0); }
    Elem multiply(const Elem& a, const Elem& b) const override {
        Elem r(static_cast<std::size_t>(d_));
        for (int i = 0; i < d_; ++i) r[static_cast<std::size_t>(i)] = a.at(static_cast<std::size_t>(i)) + b.at(static_cast<std::size_t>(i));
        return r;
    }
    Elem invert(const Elem& a) const override {
        Elem r(static_cast<std::size_t>(d_));
        for (int i = 0; i < d_; ++i) r[static_cast<std::size_t>(i)] = -a.at(static_cast<std::size_t>(i));
        return r;
    }
    std::vector<Elem> generators() const override {
        std::vector<Elem> gens;
        for (int i = 0; i < d_; ++i) {
            Elem e(static_cast<std::size_t>(d_), 0);
            e[static_cast<std::size_t>(i)] = 1;
            gens.push_back(e);
        }
        return gens;
    }
    std::string name() const override { return d_ == 1 ? "Z" : "Z^" + std::to_string(d_); }

private:
    int d_;
};

class CyclicGroup final : public GroupOracle {
public:
    explicit CyclicGroup(int n) : n_(n) {
        if (n < 1) throw ArgumentError("Z/n needs n >= 1");
    }
    Elem identity() const override { return {0}; }
    Elem multiply(const Elem& a, const Elem& b) const override { return {floor_mod(a.at(0) + b.at(0), n_)}; }
    Elem invert(const Elem& a) const override { return {floor_mod(-a.at(0), n_)}; }
    std::vector<Elem> generators() const override { return {{1}}; }
    std::string name() const override { return "Z/" + std::to_string(n_); }
    std::optional<std::vector<Elem>> elements() const override {
        std::vector<Elem> all;
        for (int i = 0; i < n_; ++i) all.push_back({i});
        return all;
    }

private:
    int n_;
};

// Order 2n: elements a^i b^j with b a = a^-1 b.
class DihedralGroup final : public GroupOracle {
public:
    explicit DihedralGroup(int n) : n_(n) {
        if (n < 1) throw ArgumentError("dihedral needs n >= 1");
    }
    Elem identity() const override { return {0, 0}; }
    Elem multiply(const Elem& a, const Elem& b) const override {
        const std::int64_t i = a.at(0) + (a.at(1) ? -b.at(0) : b.at(0));
        return {floor_mod(i, n_), (a.at(1) ^ b.at(1)) & 1};
    }
    Elem invert(const Elem& a) const override {
        return {a.at(1) ? a.at(0) : floor_mod(-a.at(0), n_), a.at(1)};
    }
    std::vector<Elem> generators() const override { return {{1, 0}, {0, 1}}; }
    std::string name() const override { return "dihedral:" + std::to_string(n_); }
    std::optional<std::vector<Elem>> elements() const override {
        std::vector<Elem> all;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < 2; ++j) all.push_back({i, j});
        return all;
    }

private:
    int n_;
};

// Reduced words over letters +-1..+-k.
class FreeGroup final : public GroupOracle {
public:
    explicit FreeGroup(int k) : k_(k) {
        if (k < 1) throw ArgumentError("free group needs k >= 1");
    }
    Elem identity() const override { return {}; }
    Elem multiply(const Elem& a, const Elem& b) const override {
        Elem r = a;
        for (std::int64_t x : b) {
            if (!r.empty() && r.back() == -x)
                r.pop_back();
            else
                r.push_back(x);
        }
        return r;
    }
    Elem invert(const Elem& a) const override {
        Elem r;
        for (auto it = a.rbegin(); it != a.rend(); ++it) r.push_back(-*it);
        return r;
    }
    std::vector<Elem> generators() const override {
        std::vector<Elem> gens;
        for (int i = 1; i <= k_; ++i) gens.push_back({i});
        return gens;
    }
    std::string name() const override { return "free:" + std::to_string(k_); }

private:
    int k_;
};

// 3x3 unitriangular integer matrices (1 a c; 0 1 b; 0 0 1) as (a, b, c).
class HeisenbergGroup final : public GroupOracle {
public:
    Elem identity() const override { return {0, 0, 0}; }
    Elem multiply(const Elem& x, const Elem& y) const override {
        return {x.at(0) + y.at(0), x.at(1) + y.at(1), x.at(2) + y.at(2) + x.at(0) * y.at(1)};
    }
    Elem invert(const Elem& x) const override {
        return {-x.at(0), -x.at(1), x.at(0) * x.at(1) - x.at(2)};
    }
    std::vector<Elem> generators() const override { return {{1, 0, 0}, {0, 1, 0}}; }
    std::string name() const override { return "heisenberg"; }
};

// (Z/2) wr (Z/m): (lamps, pos) with lamps a bitmask over Z/m; the finite
// window of the lamplighter.
class LamplighterGroup final : public GroupOracle {
public:
    explicit LamplighterGroup(int m) : m_(m) {
        if (m < 1 || m > 62) throw ArgumentError("lamplighter window must be 1..62");
    }
    Elem identity() const override { return {0, 0}; }
    Elem multiply(const Elem& a, const Elem& b) const override {
        return {a.at(0) ^ rot(b.at(0), a.at(1)), floor_mod(a.at(1) + b.at(1), m_)};
    }
    Elem invert(const Elem& a) const override {
        return {rot(a.at(0), -a.at(1)), floor_mod(-a.at(1), m_)};
    }
    std::vector<Elem> generators() const override { return {{1, 0}, {0, 1}}; }
    std::string name() const override { return "lamplighter:" + std::to_string(m_); }
    std::optional<std::vector<Elem>> elements() const override {
        if (m_ > 12) return std::nullopt;
        std::vector<Elem> all;
        for (std::int64_t t = 0; t < m_; ++t)
            for (std::int64_t f = 0; f < (1LL << m_); ++f) all.push_back({f, t});
        return all;
    }

private:
    std::int64_t rot(std::int64_t lamps, std::int64_t by) const {
        const std::int64_t s = floor_mod(by, m_);
        const std::int64_t mask = (1LL << m_) - 1;
        return ((lamps << s) | (lamps >> (m_ - s))) & mask;
    }
    int m_;
};

// Automorphisms of the depth-d binary tree, encoded as their action on the
// 2^d leaves in left-to-right order. Closed under composition; the canonical
// encoding is the leaf permutation itself.
class TreeAutGroup final : public GroupOracle {
public:
    explicit TreeAutGroup(int d) : d_(d) {
        if (d < 1 || d > 16) throw ArgumentError("auttree depth must be 1..16");
    }
    Elem identity() const override {
        Elem e(static_cast<std::size_t>(1) << d_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::int64_t>(i);
        return e;
    }
    Elem multiply(const Elem& a, const Elem& b) const override {
        // Right-action composition: x . (ab) = (x . a) . b
        Elem r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = b.at(static_cast<std::size_t>(a[i]));
        return r;
    }
    Elem invert(const Elem& a) const override {
        Elem r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<std::int64_t>(i);
        return r;
    }
    std::vector<Elem> generators() const override {
        // One subtree swap per internal node, heap order.
        std::vector<Elem> gens;
        const int leaves = 1 << d_;
        for (int depth = 0; depth < d_; ++depth) {
            for (int pos = 0; pos < (1 << depth); ++pos) {
                Elem g = identity();
                const int span = leaves >> depth;      // leaves under this node
                const int base = pos * span;
                for (int i = 0; i < span / 2; ++i)
                    std::swap(g[static_cast<std::size_t>(base + i)], g[static_cast<std::size_t>(base + span / 2 + i)]);
                gens.push_back(g);
            }
        }
        return gens;
    }
    std::string name() const override { return "auttree:" + std::to_string(d_); }
    std::optional<std::vector<Elem>> elements() const override {
        if (d_ > 3) return std::nullopt;  // 2^(2^d - 1) elements
        std::vector<Elem> all{identity()};
        // Close under the generators.
        std::set<Elem> seen(all.begin(), all.end());
        for (std::size_t h = 0; h < all.size(); ++h)
            for (const Elem& g : generators()) {
                Elem x = multiply(all[h], g);
                if (seen.insert(x).second) all.push_back(x);
            }
        std::sort(all.begin(), all.end());
        return all;
    }

private:
    int d_;
};

}  // namespace

std::unique_ptr<GroupOracle> make_group(const std::string& spec) {
    if (spec == "Z") return std::make_unique<ZdGroup>(1);
    if (spec.rfind("Z^", 0) == 0) return std::make_unique<ZdGroup>(std::stoi(spec.substr(2)));
    if (spec.rfind("Z/", 0) == 0) return std::make_unique<CyclicGroup>(std::stoi(spec.substr(2)));
    if (spec.rfind("dihedral:", 0) == 0)
        return std::make_unique<DihedralGroup>(std::stoi(spec.substr(9)));
    if (spec.rfind("free:", 0) == 0) return std::make_unique<FreeGroup>(std::stoi(spec.substr(5)));
    if (spec == "heisenberg") return std::make_unique<HeisenbergGroup>();
    if (spec.rfind("lamplighter:", 0) == 0)
        return std::make_unique<LamplighterGroup>(std::stoi(spec.substr(12)));
    if (spec.rfind("auttree:", 0) == 0)
        return std::make_unique<TreeAutGroup>(std::stoi(spec.substr(8)));
    throw ArgumentError("unknown group spec '" + spec + "'");
}

namespace {

std::vector<Elem> closed_generators(const GroupOracle& g) {
    std::vector<Elem> gens;
    std::set<Elem> seen;
    for (const Elem& s : g.generators()) {
        if (seen.insert(s).second) gens.push_back(s);
        const Elem inv = g.invert(s);
        if (seen.insert(inv).second) gens.push_back(inv);
    }
    return gens;
}

void spot_check_axioms(const GroupOracle& g, const std::vector<Elem>& sample) {
    const Elem e = g.identity();
    for (const Elem& x : sample) {
        if (g.multiply(x, g.invert(x)) != e)
            throw OracleError(g.name() + ": x * x^-1 != identity for " + g.describe(x));
        if (g.multiply(x, e) != x || g.multiply(e, x) != x)
            throw OracleError(g.name() + ": identity law fails for " + g.describe(x));
    }
    const std::size_t cap = std::min<std::size_t>(sample.size(), 6);
    for (std::size_t i = 0; i < cap; ++i)
        for (std::size_t j = 0; j < cap; ++j)
            for (std::size_t k = 0; k < cap; ++k) {
                const Elem lhs = g.multiply(g.multiply(sample[i], sample[j]), sample[k]);
                const Elem rhs = g.multiply(sample[i], g.multiply(sample[j], sample[k]));
                if (lhs != rhs) throw OracleError(g.name() + ": associativity fails on a sampled triple");
            }
}

}  // namespace

CayleyBall cayley_ball(const GroupOracle& g, int radius) {
    if (radius < 0) throw ArgumentError("radius must be >= 0");
    const auto gens = closed_generators(g);
    CayleyBall ball;
    std::map<Elem, int> index;
    std::vector<int> depth;
    ball.elems.push_back(g.identity());
    index.emplace(g.identity(), 0);
    depth.push_back(0);
    for (std::size_t h = 0; h < ball.elems.size(); ++h) {
        if (depth[h] == radius) continue;
        for (const Elem& s : gens) {
            Elem y = g.multiply(ball.elems[h], s);
            if (!index.contains(y)) {
                index.emplace(y, static_cast<int>(ball.elems.size()));
                ball.elems.push_back(std::move(y));
                depth.push_back(depth[h] + 1);
            }
        }
    }
    spot_check_axioms(g, std::vector<Elem>(ball.elems.begin(),
                                           ball.elems.begin() + std::min<std::size_t>(ball.elems.size(), 8)));
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < ball.elems.size(); ++i)
        for (const Elem& s : gens) {
            const auto it = index.find(g.multiply(ball.elems[i], s));
            if (it != index.end() && it->second != static_cast<int>(i))
                edges.emplace_back(std::min<int>(static_cast<int>(i), it->second),
                                   std::max<int>(static_cast<int>(i), it->second));
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    ball.graph = Graph::simple(static_cast<int>(ball.elems.size()), std::move(edges));
    return ball;
}

OrderedGroundSet::OrderedGroundSet(std::vector<GroupOracle::Elem> elems) : elems_(std::move(elems)) {
    std::set<Elem> seen;
    for (const Elem& e : elems_)
        if (!seen.insert(e).second) throw StructuralError("ground set elements must be distinct");
}

std::optional<int> OrderedGroundSet::position(const GroupOracle::Elem& e) const {
    const auto it = std::find(elems_.begin(), elems_.end(), e);
    if (it == elems_.end()) return std::nullopt;
    return static_cast<int>(it - elems_.begin());
}

Matrix action_matrix(const OrderedGroundSet& x,
                     const std::function<GroupOracle::Elem(const GroupOracle::Elem&)>& act) {
    std::map<Elem, int> pos;
    for (int i = 0; i < x.size(); ++i) pos.emplace(x.elems()[static_cast<std::size_t>(i)], i);
    std::vector<std::pair<int, int>> ones;
    for (int i = 0; i < x.size(); ++i) {
        const auto it = pos.find(act(x.elems()[static_cast<std::size_t>(i)]));
        if (it != pos.end()) ones.emplace_back(i, it->second);
    }
    return Matrix(x.size(), x.size(), std::move(ones));
}

Matrix right_action_matrix(const OrderedGroundSet& x, const GroupOracle& g,
                           const GroupOracle::Elem& elem) {
    return action_matrix(x, [&](const Elem& e) { return g.multiply(e, elem); });
}

UniformWidthEstimate uniform_width_estimate(const GroupOracle& g, const OrderedGroundSet& x,
                                            int max_word_length, const Budget& budget) {
    const auto gens = closed_generators(g);
    std::set<Elem> elems{g.identity()};
    std::vector<Elem> frontier{g.identity()};
    for (int l = 0; l < max_word_length; ++l) {
        std::vector<Elem> next;
        for (const Elem& e : frontier)
            for (const Elem& s : gens) {
                Elem y = g.multiply(e, s);
                if (elems.insert(y).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    UniformWidthEstimate est;
    for (const Elem& e : elems) {
        const Matrix window = right_action_matrix(x, g, e);
        ++est.elements_sampled;
        const double loss = 1.0 - static_cast<double>(window.ones().size()) / std::max(1, x.size());
        est.max_boundary_loss = std::max(est.max_boundary_loss, loss);
        if (loss > 0.5) est.window_warning = true;
        if (window.ones().empty()) continue;
        // Empty rows and columns are boundary artifacts; width is taken on the
        // surviving partial bijection.
        std::vector<int> rows, cols;
        for (const auto& [i, j] : window.ones()) {
            rows.push_back(i);
            cols.push_back(j);
        }
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        const auto solve = stww_matrix_exact(window.submatrix(rows, cols), budget);
        if (solve.status != SolveStatus::exact)
            throw BudgetError("uniform width estimate ran out of budget on an action matrix");
        est.width = std::max(est.width, solve.width);
    }
    return est;
}

OrderedGroundSet extension_order(const GroupOracle& g,
                                 const std::vector<GroupOracle::Elem>& subgroup_order,
                                 const std::vector<GroupOracle::Elem>& transversal) {
    const auto all = g.elements();
    if (!all) throw ArgumentError("extension_order needs a finite group");
    std::map<Elem, int> h_rank;
    for (std::size_t i = 0; i < subgroup_order.size(); ++i) {
        if (!h_rank.emplace(subgroup_order[i], static_cast<int>(i)).second)
            throw ArgumentError("subgroup list has duplicates");
    }
    // Light subgroup validation: closed under product and inverse.
    for (const Elem& a : subgroup_order) {
        if (!h_rank.contains(g.invert(a))) throw ArgumentError("subgroup not closed under inverse");
        for (const Elem& b : subgroup_order)
            if (!h_rank.contains(g.multiply(a, b)))
                throw ArgumentError("subgroup not closed under product");
    }
    // Each x lies in exactly one coset H t, i.e. x t^-1 in H for exactly one t.
    struct Key {
        int coset;
        int inner;
        int tiebreak;
    };
    std::vector<std::pair<Key, Elem>> keyed;
    for (std::size_t xi = 0; xi < all->size(); ++xi) {
        const Elem& x = (*all)[xi];
        int found = -1;
        int inner = -1;
        for (std::size_t t = 0; t < transversal.size(); ++t) {
            const Elem rep = g.multiply(x, g.invert(transversal[t]));
            const auto it = h_rank.find(rep);
            if (it != h_rank.end()) {
                if (found >= 0)
                    throw ArgumentError("transversal has two representatives of one coset");
                found = static_cast<int>(t);
                inner = it->second;
            }
        }
        if (found < 0) throw ArgumentError("transversal misses the coset of " + g.describe(x));
        keyed.push_back({Key{found, inner, static_cast<int>(xi)}, x});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first.coset, a.first.inner) < std::tie(b.first.coset, b.first.inner);
    });
    std::vector<Elem> ordered;
    ordered.reserve(keyed.size());
    for (auto& [k, e] : keyed) ordered.push_back(std::move(e));
    return OrderedGroundSet(std::move(ordered));
}

BijectionMatrix separable_perm(int depth, const std::vector<bool>& antidiagonal) {
    if (depth < 0 || depth > 20) throw ArgumentError("separable_perm depth must be 0..20");
    if (static_cast<int>(antidiagonal.size()) != (1 << depth) - 1)
        throw ArgumentError("need one choice per internal node (2^depth - 1)");
    std::vector<int> perm{0};
    for (int level = 0; level < depth; ++level) {
        std::vector<int> next(perm.size() * 2);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            const bool swap = antidiagonal[(static_cast<std::size_t>(1) << level) - 1 + i];
            next[2 * i] = 2 * perm[i] + (swap ? 1 : 0);
            next[2 * i + 1] = 2 * perm[i] + (swap ? 0 : 1);
        }
        perm = std::move(next);
    }
    return BijectionMatrix(std::move(perm));
}

}  // namespace tww
