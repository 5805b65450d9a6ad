#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/matrix.hpp"
#include "tww/solver.hpp"

namespace tww {

// Finite-scale group interface. Elements are canonical encodings (per-group
// normal forms), never raw words, so equality is value equality.
class GroupOracle {
public:
    using Elem = std::vector<std::int64_t>;

    virtual ~GroupOracle() = default;
    virtual Elem identity() const = 0;
    virtual Elem multiply(const Elem& a, const Elem& b) const = 0;
    virtual Elem invert(const Elem& a) const = 0;
    virtual std::vector<Elem> generators() const = 0;
    virtual std::string name() const = 0;
    // All elements for finite groups, in the group's natural order.
    virtual std::optional<std::vector<Elem>> elements() const { return std::nullopt; }
    virtual std::string describe(const Elem& e) const;
};

// Built-in library: "Z", "Z^d", "Z/n", "dihedral:n" (order 2n), "free:k",
// "heisenberg", "lamplighter:m" (Z/2 wr Z/m), "auttree:d" (depth-d binary
// tree automorphisms acting on 2^d leaves).
std::unique_ptr<GroupOracle> make_group(const std::string& spec);

struct CayleyBall {
    Graph graph;                          // induced subgraph on the ball
    std::vector<GroupOracle::Elem> elems;  // vertex i = elems[i], BFS discovery order
};

// Radius-r ball around the identity in Cay(Gamma, S u S^-1) by breadth-first
// closure. Spot-checks associativity on sampled triples and throws OracleError
// on an inconsistency.
CayleyBall cayley_ball(const GroupOracle& g, int radius);

// A finite window of an ordered ground set: position = rank.
class OrderedGroundSet {
public:
    explicit OrderedGroundSet(std::vector<GroupOracle::Elem> elems);
    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<GroupOracle::Elem>& elems() const { return elems_; }
    std::optional<int> position(const GroupOracle::Elem& e) const;

private:
    std::vector<GroupOracle::Elem> elems_;
};

// Matrix of the action x -> act(x) restricted to the window: a 1 at
// (pos(x), pos(act(x))) when both endpoints lie inside. At most one 1 per
// row and column.
Matrix action_matrix(const OrderedGroundSet& x,
                     const std::function<GroupOracle::Elem(const GroupOracle::Elem&)>& act);
// Action by right product with g.
Matrix right_action_matrix(const OrderedGroundSet& x, const GroupOracle& g,
                           const GroupOracle::Elem& elem);

struct UniformWidthEstimate {
    int width = 0;  // max stww over the sampled action matrices: a lower bound
                    // for the group invariant, never the invariant itself
    int elements_sampled = 0;
    double max_boundary_loss = 0.0;  // fraction of window rows lost off-window
    bool window_warning = false;     // set when some action loses > half the window
};

// Enumerates elements of word length <= max_word_length and takes the max
// exact stww of their windowed action matrices.
UniformWidthEstimate uniform_width_estimate(const GroupOracle& g, const OrderedGroundSet& x,
                                            int max_word_length, const Budget& budget = {});

// The order of an extension: cosets Ht ordered by the transversal list, and
// x < y inside a coset iff x t^-1 precedes y t^-1 in the subgroup order.
// subgroup_order lists H in its order; transversal lists one representative
// per right coset in coset order. Requires a finite group.
OrderedGroundSet extension_order(const GroupOracle& g,
                                 const std::vector<GroupOracle::Elem>& subgroup_order,
                                 const std::vector<GroupOracle::Elem>& transversal);

// Separable permutation on 2^depth points: substitute the 2x2 diagonal or
// antidiagonal at each internal node of the depth-`depth` binary tree.
// Choices are heap-indexed: node i has children 2i+1, 2i+2.
BijectionMatrix separable_perm(int depth, const std::vector<bool>& antidiagonal);

}  // namespace tww
