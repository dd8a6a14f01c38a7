#ifndef MIRROR33_LATTICE_HPP
#define MIRROR33_LATTICE_HPP

#include <stdexcept>
#include <string>

#include "mirror33/linalg.hpp"

namespace mirror33 {

/**
 * The two rank-5 lattices of the construction, realized inside Z^6:
 *
 *   N = { x in Z^6 : x_1 + ... + x_6 = 0 },
 *   M = Z^6 / Z.(1,...,1),
 *
 * plus plain Z^d for generic computations. All geometry internally works in
 * reduced coordinates (Z^5 for N and M, chosen so that the N/M pairing becomes
 * the standard dot product), and expands back to six coordinates at the I/O
 * boundary. The canonical representative of an M-class has last coordinate 0.
 */
struct Space {
    enum class Kind { SumZero, Quotient, Plain };

    Kind kind = Kind::Plain;
    int dim = 0; // reduced dimension

    static Space N() { return {Kind::SumZero, 5}; }
    static Space M() { return {Kind::Quotient, 5}; }
    static Space plain(int d) { return {Kind::Plain, d}; }

    int ambient_rank() const { return kind == Kind::Plain ? dim : 6; }

    Space dual() const
    {
        switch (kind) {
        case Kind::SumZero:  return M();
        case Kind::Quotient: return N();
        default:             return *this;
        }
    }

    bool operator==(const Space& o) const { return kind == o.kind && dim == o.dim; }
    bool operator!=(const Space& o) const { return !(*this == o); }

    std::string name() const
    {
        switch (kind) {
        case Kind::SumZero:  return "N";
        case Kind::Quotient: return "M";
        default:             return "Z" + std::to_string(dim);
        }
    }
};

/** A lattice vector carrying its space; construction canonicalizes. */
struct LatticeVector {
    Space space;
    VecZ ambient; // 6 coordinates for N/M (M normalized to last = 0), d for plain

    LatticeVector() = default;

    LatticeVector(Space s, VecZ coords) : space(s), ambient(std::move(coords))
    {
        if (ambient.size() != space.ambient_rank())
            throw std::invalid_argument("LatticeVector: wrong number of coordinates");
        switch (space.kind) {
        case Space::Kind::SumZero: {
            Int sum = 0;
            for (Eigen::Index i = 0; i < ambient.size(); ++i) sum += ambient[i];
            if (sum != 0)
                throw std::invalid_argument("LatticeVector: coordinates do not sum to zero");
            break;
        }
        case Space::Kind::Quotient: {
            const Int last = ambient[5];
            if (last != 0)
                for (Eigen::Index i = 0; i < 6; ++i) ambient[i] -= last;
            break;
        }
        case Space::Kind::Plain:
            break;
        }
    }

    VecZ reduced() const
    {
        if (space.kind == Space::Kind::Plain) return ambient;
        return ambient.head(5);
    }

    static LatticeVector from_reduced(Space s, const VecZ& r)
    {
        if (s.kind == Space::Kind::Plain) return LatticeVector(s, r);
        if (r.size() != 5)
            throw std::invalid_argument("from_reduced: expected 5 coordinates");
        VecZ full(6);
        full.head(5) = r;
        if (s.kind == Space::Kind::SumZero) {
            Int sum = 0;
            for (int i = 0; i < 5; ++i) sum += r[i];
            full[5] = -sum;
        } else {
            full[5] = 0;
        }
        return LatticeVector(s, full);
    }

    bool operator==(const LatticeVector& o) const
    {
        return space == o.space && ambient == o.ambient;
    }
};

/**
 * Perfect pairing between dual spaces. In reduced coordinates both the N/M
 * pairing and the plain pairing are the standard dot product: for n in N and
 * the canonical M-representative m (last coordinate 0) the ambient dot product
 * has no contribution from the sixth coordinate, and shifting m by multiples
 * of (1,...,1) adds a multiple of sum(n) = 0.
 */
inline Int pairing(const LatticeVector& n, const LatticeVector& m)
{
    if (n.space.dual() != m.space)
        throw std::invalid_argument("pairing: spaces are not dual");
    const VecZ a = n.reduced(), b = m.reduced();
    Int s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/** e_i in M (or a plain space), as a reduced vector. */
inline VecZ basis_vector(const Space& s, int i)
{
    VecZ v = VecZ::Zero(s.dim);
    if (s.kind == Space::Kind::Quotient && i == 5) {
        // e_6 normalizes to (-1,...,-1,0).
        for (int k = 0; k < 5; ++k) v[k] = -1;
        return v;
    }
    if (i < 0 || i >= s.dim)
        throw std::invalid_argument("basis_vector: index out of range");
    v[i] = 1;
    return v;
}

} // namespace mirror33

#endif
