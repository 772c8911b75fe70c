#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rothcoss/radical_expr.hpp"
#include "rothcoss/surd.hpp"

namespace rothcoss {

enum class RatioKind { quadratic_surd, cubic_cardan, multi_edge, none };

std::string to_string(RatioKind k);

struct FaceCount {
    unsigned count;
    unsigned sides;
};

/// Another edge class expressed as factor * reference edge.
struct EdgeRelation {
    std::string edge;
    std::string description;
    RadicalExpr factor;
};

struct SolidSpec {
    std::string id;
    std::vector<FaceCount> faces;
    std::string historical_name;
    std::string modern_name;
    RatioKind kind = RatioKind::none;
    /// Reference edge name: `d`, `d1` or `d2`.
    std::string reference_edge = "d";
    /// (2 rho / reference edge)^2 when it is a quadratic surd.
    std::optional<QuadraticSurd> ratio_sq;
    /// (2 rho / reference edge)^2 in general; empty for name-only entries.
    std::optional<RadicalExpr> ratio_sq_expr;
    std::vector<EdgeRelation> edge_relations;
    std::string notes;
};

class UnknownSolid : public std::out_of_range {
public:
    explicit UnknownSolid(const std::string& id);
};

/// All cataloged solids in a fixed order, ratio-bearing entries first.
const std::vector<SolidSpec>& catalog();

/// Throws UnknownSolid, whose message lists the known ids.
const SolidSpec& find_solid(std::string_view id);

std::vector<std::string> solid_ids();

/// `18[4] 8[3]`
std::string face_vector(const SolidSpec& s);

/// 2 rho for reference edge d; exact normal form when available.
/// Throws std::invalid_argument for solids without a ratio.
RadicalExpr circumdiameter_from_edge(const SolidSpec& s, const RadicalExpr& d);

/// Reference edge for circumdiameter D; exact normal form when available.
RadicalExpr edge_from_circumdiameter(const SolidSpec& s, const RadicalExpr& diameter);

/// (2 rho / d1)^2 for the 20[3] 12[5] 30[4] family with r = d2 / d1.
RadicalExpr pseudo_rcd_ratio_sq(const RadicalExpr& r);

/// The golden ratio (1+sqrt(5))/2.
QuadraticSurd golden_ratio();

using Vec3 = std::array<QuadraticSurd, 3>;

/// (2 rho / d)^2 with rho the common distance from the origin and d the
/// smallest vertex distance. Throws std::invalid_argument when the vertices
/// are not all at the same distance from the origin.
QuadraticSurd circumradius_sq_from_coordinates(const std::vector<Vec3>& vertices);

std::vector<Vec3> cube_vertices();
std::vector<Vec3> cuboctahedron_vertices();
/// The 60 vertices with edge 2/phi.
std::vector<Vec3> rhombicosidodecahedron_vertices();

/// Replaces an expression by its exact normal form when it has one.
RadicalExpr simplify(const RadicalExpr& e);

}  // namespace rothcoss
