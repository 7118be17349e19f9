#include "mastermind/infotree.hpp"

#include <algorithm>
#include <string>

namespace mastermind {

TreeShape::TreeShape(int n) : _n(n), _leaves(1), _depth(0)
{
    if (n < 1)
        throw UsageError("tree needs n >= 1");
    while (_leaves < n) {
        _leaves *= 2;
        ++_depth;
    }
}

bool TreeShape::valid(Vertex v) const noexcept
{
    return v.depth >= 0 && v.depth <= _depth && v.index >= 1 && v.index <= (1 << v.depth);
}

Interval TreeShape::interval(Vertex v) const
{
    if (!valid(v))
        throw UsageError("invalid vertex (depth " + std::to_string(v.depth) + ", index " +
                         std::to_string(v.index) + ")");
    const int width = _leaves >> v.depth;
    return {width * (v.index - 1) + 1, width * v.index};
}

Interval TreeShape::clamped(Vertex v) const
{
    Interval iv = interval(v);
    iv.hi = std::min(iv.hi, _n);
    return iv;
}

TokenState::TokenState(const TreeShape &shape)
  : _shape(&shape),
    _position(static_cast<std::size_t>(shape.n()), shape.root()),
    _occupants(shape.vertex_count()),
    _slot(static_cast<std::size_t>(shape.n()))
{
    auto &root = _occupants[shape.id(shape.root())];
    root.reserve(_position.size());
    for (std::size_t c = 0; c < _position.size(); ++c) {
        root.push_back(static_cast<Color>(c + 1));
        _slot[c] = c;
    }
}

std::vector<Color> TokenState::sorted_tokens_at(Vertex v) const
{
    std::vector<Color> out = tokens_at(v);
    std::sort(out.begin(), out.end());
    return out;
}

void TokenState::move(Color color, Vertex to)
{
    if (color < 1 || color > colors())
        throw UsageError("no token of color " + std::to_string(color));
    if (!_shape->valid(to))
        throw UsageError("token moved to an invalid vertex");

    const auto c = static_cast<std::size_t>(color - 1);
    auto &from_list = _occupants[_shape->id(_position[c])];
    const std::size_t slot = _slot[c];
    from_list[slot] = from_list.back();
    _slot[static_cast<std::size_t>(from_list[slot] - 1)] = slot;
    from_list.pop_back();

    auto &to_list = _occupants[_shape->id(to)];
    _slot[c] = to_list.size();
    to_list.push_back(color);
    _position[c] = to;
}

SignedQuery token_query(const TreeShape &shape, const TokenState &state, Color color)
{
    const Vertex v = state.position(color);
    if (shape.is_leaf(v))
        throw UsageError("token of color " + std::to_string(color) + " is already on a leaf");

    const Interval left = shape.clamped(v.left());
    SignedQuery q(static_cast<std::size_t>(shape.n()));
    for (int p = left.lo; p <= left.hi; ++p)
        q[static_cast<std::size_t>(p - 1)] = color;
    return q;
}

void slide_token(const TreeShape &shape, TokenState &state, Color color, int answer)
{
    const Vertex v = state.position(color);
    if (shape.is_leaf(v))
        throw UsageError("token of color " + std::to_string(color) + " is already on a leaf");
    if (answer != 0 && answer != 1)
        throw ProtocolViolation("token query for color " + std::to_string(color) +
                                " answered " + std::to_string(answer) + ", expected 0 or 1");
    state.move(color, answer == 1 ? v.left() : v.right());
}

bool right_half_is_phantom(const TreeShape &shape, Vertex v)
{
    return shape.clamped(v.right()).empty();
}

std::vector<Color> extract_codeword(const TreeShape &shape, const TokenState &state)
{
    std::vector<Color> out(static_cast<std::size_t>(shape.n()), 0);
    for (Color color = 1; color <= state.colors(); ++color) {
        const Vertex v = state.position(color);
        if (!shape.is_leaf(v))
            throw UsageError("token of color " + std::to_string(color) + " is not on a leaf");
        const int p = shape.interval(v).lo;
        if (p > shape.n())
            throw ProtocolViolation("token of color " + std::to_string(color) +
                                    " reached phantom position " + std::to_string(p));
        auto &slot = out[static_cast<std::size_t>(p - 1)];
        if (slot != 0)
            throw ProtocolViolation("colors " + std::to_string(slot) + " and " +
                                    std::to_string(color) + " share position " +
                                    std::to_string(p));
        slot = color;
    }
    return out;
}

} // namespace mastermind
