/* 3D primitives for the coarse-grained chain model: vectors, proper
 * rotations, bend/torsion angles, optimal rigid superposition (RMSD) and
 * internal-coordinate point construction. All angles are degrees, all
 * lengths are Angstrom unless a centi-Angstrom integer type is used. */
#ifndef FRAGFOLD_GEOM_HPP
#define FRAGFOLD_GEOM_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace fragfold {

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Coordinates on the centi-Angstrom integer grid.
struct IVec3 {
    int32_t x = 0, y = 0, z = 0;
    bool operator==(const IVec3&) const = default;
};

/// Round half away from zero, the quantization used at placement time.
int32_t round_half_away(double v);
IVec3 quantize_centi(const Vec3& v);
inline Vec3 centi_to_real(const IVec3& v) {
    return {v.x / 100.0, v.y / 100.0, v.z / 100.0};
}
/// Squared distance on the integer grid (centi-Angstrom^2), overflow-safe.
int64_t dist2_centi(const IVec3& a, const IVec3& b);

/// Proper rotation matrix, row-major.
struct Rot3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Rot3 identity() { return Rot3{}; }

    Vec3 apply(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }
    Rot3 operator*(const Rot3& o) const;
    Rot3 transposed() const;
    double det() const;
    /// max |(R^T R - I)_ij|
    double orthonormality_error() const;
    /// Gram-Schmidt on rows; deterministic repair of accumulated drift.
    Rot3 reorthonormalized() const;

    bool operator==(const Rot3&) const = default;
};

/// Rotation from entries stored as integers scaled by 1000.
Rot3 rot_from_milli(const std::array<int32_t, 9>& k);
std::array<int32_t, 9> rot_to_milli(const Rot3& r);

/// Angle at vertex b between rays b->a and b->c, degrees in [0, 180].
/// Throws std::domain_error on coincident points.
double bend_angle(const Vec3& a, const Vec3& b, const Vec3& c);

/// Signed dihedral of the four points, degrees in (-180, 180].
/// Positive when a4 is rotated counterclockwise looking down a2->a3.
/// Throws std::domain_error when three consecutive points are collinear.
double torsion_angle(const Vec3& a1, const Vec3& a2, const Vec3& a3,
                     const Vec3& a4);

struct Superposition {
    Rot3 rot;               // applies to the source points
    Vec3 shift;             // rot*q + shift ~ p
    double rmsd = 0.0;      // minimized RMSD, Angstrom
    bool degenerate = false; // ambiguous optimum, tie broken toward identity
};

/// Optimal rigid superposition of `source` onto `target` (proper rotation
/// only, never a reflection). |target| == |source| >= 3 required.
Superposition superpose(std::span<const Vec3> target,
                        std::span<const Vec3> source);

/// RMSD after centroid alignment but without rotation; superpose() can
/// never do worse than this.
double unrotated_rmsd(std::span<const Vec3> target,
                      std::span<const Vec3> source);

/// The unique point at `dist` from `cur` such that the bend angle
/// (point, cur, next) equals `bend_deg` and the torsion
/// (prev, cur, next, point) equals `torsion_deg`.
/// Throws std::domain_error when prev, cur, next are collinear.
Vec3 place_centroid(const Vec3& prev, const Vec3& cur, const Vec3& next,
                    double dist, double bend_deg, double torsion_deg);

/// Chain extension by internal coordinates: the point d at `dist` from c
/// with bend angle (b, c, d) = `bend_deg` and torsion (a, b, c, d) =
/// `torsion_deg`. Throws std::domain_error when a, b, c are collinear.
Vec3 extend_chain(const Vec3& a, const Vec3& b, const Vec3& c, double dist,
                  double bend_deg, double torsion_deg);

} // namespace fragfold

#endif
