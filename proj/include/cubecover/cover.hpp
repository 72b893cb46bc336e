#pragma once

#include "cubecover/io.hpp"
#include "cubecover/tower.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cubecover {

struct CoverComponent {
    std::vector<Vertex> vertices;  // ascending
    std::uint32_t diameter = 0;
    std::string star;              // T₁-vertex id of the star containing the images
};

struct CoverLevel {
    std::uint32_t level = 0;
    std::vector<Vertex> vertices;  // U_ℓ, ascending
    std::vector<CoverComponent> components;
};

/// The sets U_0..U_D with their r-components, each mapped by f into a single T₂-star.
struct CoverCertificate {
    Rational r;
    ExtendedRational delta;
    Rational epsilon;
    std::uint32_t N = 0;
    std::vector<CoverLevel> levels;
    std::uint32_t max_diameter = 0;
};

struct CoverOptions {
    TowerOptions tower;
};

/// ε = min(1, δ/(r+1)) for the star separation δ of the complex's dimension.
Rational cover_epsilon(const ExtendedRational& delta, const Rational& r);

/// Builds the tower at ε, classifies every vertex by the stars containing f(x) and splits
/// each U_ℓ into r-components. Throws PropertyViolation if an r-component meets two stars.
CoverCertificate build_cover(ComplexPtr cx, const Rational& r, const CoverOptions& options = {});

/// Recomputes everything from the complex and checks the certificate against it: the
/// constants, the map f, star membership of every vertex, the r-components, their stars
/// and diameters, coverage and separation. Returns the failures found (empty when valid).
std::vector<std::string> verify_certificate(ComplexPtr cx, const CoverCertificate& cert,
                                            const CoverOptions& options = {});

json certificate_to_json(const CoverCertificate& cert);
CoverCertificate certificate_from_json(const json& doc);

}  // namespace cubecover
