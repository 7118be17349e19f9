// infotree.hpp -- the information tree and its token game

#pragma once

#include "mastermind/engine.hpp"

#include <cstddef>
#include <vector>

namespace mastermind {

/// Closed interval of 1-based positions; empty when lo > hi.
struct Interval
{
    int lo = 1;
    int hi = 0;

    bool empty() const noexcept { return lo > hi; }
    int size() const noexcept { return empty() ? 0 : hi - lo + 1; }
    bool contains(int p) const noexcept { return lo <= p && p <= hi; }
    bool operator==(const Interval &) const = default;
};

/// Vertex of the complete tree: depth from the root and 1-based index
/// from the left at that depth.
struct Vertex
{
    int depth = 0;
    int index = 1;

    Vertex left() const noexcept { return {depth + 1, 2 * index - 1}; }
    Vertex right() const noexcept { return {depth + 1, 2 * index}; }
    bool operator==(const Vertex &) const = default;
};

/// Complete binary tree with n_T = 2^depth leaves over positions [1, n_T];
/// positions above n are phantoms.
class TreeShape
{
public:
    /// Throws UsageError for n < 1.
    explicit TreeShape(int n);

    int n() const noexcept { return _n; }
    int leaves() const noexcept { return _leaves; }
    int depth() const noexcept { return _depth; }
    Vertex root() const noexcept { return {0, 1}; }

    bool valid(Vertex v) const noexcept;
    bool is_leaf(Vertex v) const noexcept { return v.depth == _depth; }
    /// Leaves below v (1 for a leaf).
    int leaves_below(Vertex v) const noexcept { return _leaves >> v.depth; }

    /// Interval over [1, n_T]. Throws UsageError for an invalid vertex.
    Interval interval(Vertex v) const;
    /// interval(v) intersected with [1, n]; may be empty.
    Interval clamped(Vertex v) const;

    /// Dense index in [0, 2 n_T - 1), heap order.
    std::size_t id(Vertex v) const noexcept
    {
        return (std::size_t{1} << v.depth) + static_cast<std::size_t>(v.index) - 2;
    }
    std::size_t vertex_count() const noexcept { return 2 * static_cast<std::size_t>(_leaves) - 1; }

private:
    int _n;
    int _leaves;
    int _depth;
};

/// Where each color's token sits. All tokens start at the root.
class TokenState
{
public:
    explicit TokenState(const TreeShape &shape);

    int colors() const noexcept { return static_cast<int>(_position.size()); }
    Vertex position(Color color) const { return _position.at(static_cast<std::size_t>(color - 1)); }

    /// Tokens at v, in no particular order.
    const std::vector<Color> &tokens_at(Vertex v) const { return _occupants.at(_shape->id(v)); }

    /// Tokens at v sorted by color; the order processes query them in.
    std::vector<Color> sorted_tokens_at(Vertex v) const;

    /// Moves a token without any checks beyond vertex validity.
    void move(Color color, Vertex to);

private:
    const TreeShape *_shape;
    std::vector<Vertex> _position;
    std::vector<std::vector<Color>> _occupants;
    std::vector<std::size_t> _slot; // index of each token within its occupant list
};

/// The color on the left half of its vertex's interval (clamped to [n]),
/// blanks elsewhere. Throws UsageError if the token sits on a leaf.
SignedQuery token_query(const TreeShape &shape, const TokenState &state, Color color);

/// Left child on answer 1, right child on 0; anything else is a
/// ProtocolViolation. Throws UsageError if the token sits on a leaf.
void slide_token(const TreeShape &shape, TokenState &state, Color color, int answer);

/// True when the right half of v lies entirely beyond n, so a token at v
/// must go left and querying it would be wasted.
bool right_half_is_phantom(const TreeShape &shape, Vertex v);

/// Reads the permutation off the leaves. Throws UsageError if a token is
/// not on a leaf and ProtocolViolation if two tokens share a leaf or a
/// token sits on a phantom position.
std::vector<Color> extract_codeword(const TreeShape &shape, const TokenState &state);

} // namespace mastermind
