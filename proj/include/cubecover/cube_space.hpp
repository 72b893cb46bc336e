#pragma once

#include "cubecover/complex.hpp"
#include "cubecover/error.hpp"
#include "cubecover/rational.hpp"

#include <map>

namespace cubecover {

/// A finitely supported map from the hyperplanes of one component to [0,1]. Zero entries
/// are never stored.
struct FinSupportPoint {
    ComponentId component = 0;
    std::map<HyperplaneId, Rational> entries;

    Rational at(HyperplaneId h) const;
    /// Sets ξ(h) = value, erasing the entry when value is 0.
    void set(HyperplaneId h, const Rational& value);

    friend bool operator==(const FinSupportPoint&, const FinSupportPoint&) = default;
};

/// A point of the cube realization: the cube corner nearest the base plus fractional
/// coordinates in (0,1) on pairwise-crossing hyperplanes at that corner.
struct CubePoint {
    Vertex vertex = 0;
    std::map<HyperplaneId, Rational> frac;

    friend bool operator==(const CubePoint&, const CubePoint&) = default;
};

class NotInImage : public PropertyViolation {
public:
    enum class Reason { no_vertex_for_ones, frac_not_crossing, no_cube_at_vertex };
    NotInImage(Reason reason, const std::string& detail);
    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

const char* to_string(NotInImage::Reason r);

/// Indicator of H(base, x).
FinSupportPoint iota(const CubeComplex& cx, Vertex x);

/// The affine extension of iota to cube points.
FinSupportPoint encode(const CubeComplex& cx, const CubePoint& p);

/// ℓ¹ distance; infinite across components.
ExtendedRational l1_distance(const FinSupportPoint& a, const FinSupportPoint& b);

/// Throws InvalidInput if a value leaves [0,1] or a hyperplane is outside ξ's component.
void check_point(const CubeComplex& cx, const FinSupportPoint& xi);

/// Inverse of encode on its image; throws NotInImage otherwise.
CubePoint decode(const CubeComplex& cx, const FinSupportPoint& xi);

}  // namespace cubecover
