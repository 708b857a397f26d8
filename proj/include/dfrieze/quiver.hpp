#pragma once

/**
 * @file quiver.hpp
 * @brief Quivers, Dynkin classification, seeds, mutation and triangulations.
 *
 * Vertices are 1-based. A quiver is stored as its skew-symmetric exchange
 * matrix, b(i,j) = #(i->j) - #(j->i), which makes mutation a local rewrite.
 */

#include "dfrieze/laurent.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dfrieze {

struct Arrow {
    int source = 0;
    int target = 0;
    auto operator<=>(const Arrow&) const = default;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(int vertex_count, const std::vector<Arrow>& arrows);

    int size() const { return n_; }
    int b(int i, int j) const { return b_[index(i, j)]; }
    bool has_arrow(int i, int j) const { return b(i, j) > 0; }

    /// Arrow list with multiplicity, sorted by (source, target).
    std::vector<Arrow> arrows() const;
    /// Neighbours in the underlying graph, ascending.
    std::vector<int> neighbours(int v) const;
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

    bool is_connected() const;
    /// Vertices ordered so that every arrow goes forward; empty if cyclic.
    std::vector<int> topological_order() const;
    bool is_acyclic() const { return n_ == 0 || !topological_order().empty(); }

    /// Fomin-Zelevinsky matrix mutation at k.
    Quiver mutate(int k) const;
    /// perm[old] = new (perm[0] ignored).
    Quiver relabel(const std::vector<int>& perm) const;

    /// `1>3 2>3 3>4`
    std::string to_string() const;

    bool operator==(const Quiver&) const = default;

private:
    std::size_t index(int i, int j) const;

    int n_ = 0;
    std::vector<int> b_;
};

enum class DynkinType { A, D };

struct DynkinClass {
    DynkinType type = DynkinType::A;
    int rank = 1;

    std::string label() const;  ///< "A3", "D4"
    bool operator==(const DynkinClass&) const = default;
};

struct Classification {
    DynkinClass dynkin;
    /// relabel[user vertex] = canonical vertex.
    std::vector<int> relabel;
    /// The input redrawn in the canonical labelling.
    Quiver canonical;
};

/// A: path 1-2-...-n. D: fork {1,2}, joint 3, tail 3-4-...-n.
Classification classify(const Quiver& q);

/// All orientations of the canonical tree of a Dynkin class, in a fixed order.
std::vector<Quiver> all_orientations(const DynkinClass& d);
/// Edges of the canonical tree.
std::vector<std::pair<int, int>> dynkin_edges(const DynkinClass& d);

enum class ForkConfiguration { BothEntering, BothLeaving, Mixed };
std::string to_string(ForkConfiguration c);

struct ForkInfo {
    int joint = 3;
    int fork_vertices[2] = {1, 2};
    ForkConfiguration configuration = ForkConfiguration::BothEntering;
};

/// q must be a D quiver in canonical labelling.
ForkInfo fork_info(const Quiver& q);

/// Redraw a path quiver from right to left: vertex i -> n+1-i.
Quiver transpose(const Quiver& path);

/// The A_{2n-1} path quiver tw -> 0 -> w; labels[p] is the D vertex shown at
/// position p (0 for the middle vertex, labels[0] unused).
struct QPrime {
    Quiver path;
    std::vector<int> labels;
};

QPrime build_q_prime(const Quiver& d_quiver);

struct Seed {
    Quiver quiver;
    /// variables[i-1] sits at vertex i.
    std::vector<LaurentPolynomial> variables;

    /// u_i at vertex i, polynomials of the given rank (default: vertex count).
    static Seed initial(const Quiver& q, int rank = -1);

    const LaurentPolynomial& variable(int vertex) const { return variables.at(static_cast<std::size_t>(vertex - 1)); }
    int rank() const { return variables.empty() ? 0 : variables.front().rank(); }
    bool operator==(const Seed&) const = default;
};

/// Exchange relation x_k x_k' = prod(into k) + prod(out of k) plus matrix mutation.
Seed mutate_seed(const Seed& s, int k);

/// Lambda' of a canonical D seed: variables (x_n..x_3, P, 1, P, x_3..x_n) where
/// P = x_1 x_2, or x_1 (1 + x_3) / x_2 for a mixed fork.
Seed build_lambda_prime(const Seed& d_seed);

/// The variables that play x_1 and x_2 in Lambda': (x_1, x_2) for a
/// both-entering/leaving fork, (x_1, (1 + x_3)/x_2) for a mixed one.
std::pair<LaurentPolynomial, LaurentPolynomial> fork_pair(const Seed& d_seed);

struct ClosureResult {
    std::set<LaurentPolynomial> variables;
    std::size_t seeds = 0;
};

/// Breadth-first mutation closure; throws BudgetExceeded after max_seeds seeds.
ClosureResult mutation_closure(const Seed& s, std::size_t max_seeds = 200000);

struct Triangulation {
    int polygon_size = 0;
    std::vector<std::pair<int, int>> arcs;
};

/// Throws InvalidTriangulation.
void validate(const Triangulation& t);
/// One vertex per arc, in the listed order.
Quiver quiver_from_triangulation(const Triangulation& t);

/// Parsed `-q` argument: either `D4: 1>3 2>3 3>4` or `6: 1-3 1-4 1-5`.
struct QuiverSpec {
    std::optional<DynkinClass> claimed;
    Quiver quiver;
    std::optional<Triangulation> triangulation;
};

/// Throws ParseError on syntax, InvalidQuiver / InvalidTriangulation on content.
QuiverSpec parse_spec(std::string_view text);

/// Classification, checked against the claimed type if the spec had one.
Classification resolve(const QuiverSpec& spec);

}  // namespace dfrieze
