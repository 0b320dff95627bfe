#include "fragfold/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace fragfold {

namespace {
constexpr double kDegenerateEps = 1e-12; // squared-norm floor for direction vectors

void require_finite(const Vec3& v, const char* what) {
    if (!v.finite()) throw std::domain_error(std::string(what) + ": non-finite coordinates");
}
} // namespace

int32_t round_half_away(double v) {
    // std::llround rounds half away from zero by definition
    return static_cast<int32_t>(std::llround(v));
}

IVec3 quantize_centi(const Vec3& v) {
    return {round_half_away(v.x * 100.0), round_half_away(v.y * 100.0),
            round_half_away(v.z * 100.0)};
}

int64_t dist2_centi(const IVec3& a, const IVec3& b) {
    const int64_t dx = int64_t(a.x) - b.x;
    const int64_t dy = int64_t(a.y) - b.y;
    const int64_t dz = int64_t(a.z) - b.z;
    return dx * dx + dy * dy + dz * dz;
}

Rot3 Rot3::operator*(const Rot3& o) const {
    Rot3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += m[3 * i + k] * o.m[3 * k + j];
            r.m[3 * i + j] = s;
        }
    return r;
}

Rot3 Rot3::transposed() const {
    Rot3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[3 * i + j] = m[3 * j + i];
    return r;
}

double Rot3::det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) -
           m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

double Rot3::orthonormality_error() const {
    const Rot3 g = transposed() * (*this);
    double e = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double want = (i == j) ? 1.0 : 0.0;
            e = std::max(e, std::fabs(g.m[3 * i + j] - want));
        }
    return e;
}

Rot3 Rot3::reorthonormalized() const {
    Vec3 r0{m[0], m[1], m[2]};
    Vec3 r1{m[3], m[4], m[5]};
    r0 = r0 * (1.0 / r0.norm());
    r1 = r1 - r0 * r1.dot(r0);
    r1 = r1 * (1.0 / r1.norm());
    const Vec3 r2 = r0.cross(r1);
    return Rot3{{r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z}};
}

Rot3 rot_from_milli(const std::array<int32_t, 9>& k) {
    Rot3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = k[i] / 1000.0;
    return r;
}

std::array<int32_t, 9> rot_to_milli(const Rot3& r) {
    std::array<int32_t, 9> k{};
    for (int i = 0; i < 9; ++i) k[i] = static_cast<int32_t>(std::llround(r.m[i] * 1000.0));
    return k;
}

double bend_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
    require_finite(a, "bend_angle");
    require_finite(b, "bend_angle");
    require_finite(c, "bend_angle");
    const Vec3 u = a - b;
    const Vec3 v = c - b;
    const double nu = u.norm2(), nv = v.norm2();
    if (nu < kDegenerateEps || nv < kDegenerateEps)
        throw std::domain_error("bend_angle: coincident points");
    // atan2 form is stable near 0 and 180 degrees
    const double cosv = u.dot(v);
    const double sinv = u.cross(v).norm();
    return rad2deg(std::atan2(sinv, cosv));
}

double torsion_angle(const Vec3& a1, const Vec3& a2, const Vec3& a3,
                     const Vec3& a4) {
    require_finite(a1, "torsion_angle");
    require_finite(a2, "torsion_angle");
    require_finite(a3, "torsion_angle");
    require_finite(a4, "torsion_angle");
    const Vec3 b1 = a2 - a1;
    const Vec3 b2 = a3 - a2;
    const Vec3 b3 = a4 - a3;
    const Vec3 n1 = b1.cross(b2);
    const Vec3 n2 = b2.cross(b3);
    if (n1.norm2() < kDegenerateEps || n2.norm2() < kDegenerateEps)
        throw std::domain_error("torsion_angle: collinear triple");
    const double y = -b2.norm() * b1.dot(n2);
    const double x = n1.dot(n2);
    double deg = rad2deg(std::atan2(y, x));
    if (deg <= -180.0) deg += 360.0; // range (-180, 180]
    return deg;
}

namespace {

// Cyclic Jacobi eigendecomposition of a symmetric 4x4 matrix.
// Returns eigenvalues (unordered) and the corresponding eigenvectors as
// columns of `vec`.
void jacobi4(std::array<double, 16>& a, std::array<double, 4>& val,
             std::array<double, 16>& vec) {
    for (int i = 0; i < 16; ++i) vec[i] = (i % 5 == 0) ? 1.0 : 0.0;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) off += a[4 * p + q] * a[4 * p + q];
        if (off < 1e-30) break;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const double apq = a[4 * p + q];
                if (std::fabs(apq) < 1e-300) continue;
                const double theta = (a[4 * q + q] - a[4 * p + p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double akp = a[4 * k + p], akq = a[4 * k + q];
                    a[4 * k + p] = c * akp - s * akq;
                    a[4 * k + q] = s * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = a[4 * p + k], aqk = a[4 * q + k];
                    a[4 * p + k] = c * apk - s * aqk;
                    a[4 * q + k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = vec[4 * k + p], vkq = vec[4 * k + q];
                    vec[4 * k + p] = c * vkp - s * vkq;
                    vec[4 * k + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    for (int i = 0; i < 4; ++i) val[i] = a[4 * i + i];
}

Rot3 rot_from_quat(double w, double x, double y, double z) {
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    w /= n; x /= n; y /= n; z /= n;
    Rot3 r;
    r.m = {w * w + x * x - y * y - z * z, 2 * (x * y - w * z), 2 * (x * z + w * y),
           2 * (x * y + w * z), w * w - x * x + y * y - z * z, 2 * (y * z - w * x),
           2 * (x * z - w * y), 2 * (y * z + w * x), w * w - x * x - y * y + z * z};
    return r;
}

} // namespace

Superposition superpose(std::span<const Vec3> target,
                        std::span<const Vec3> source) {
    if (target.size() != source.size())
        throw std::invalid_argument("superpose: size mismatch");
    const size_t n = target.size();
    if (n < 3) throw std::invalid_argument("superpose: need at least 3 points");

    Vec3 pc{}, qc{};
    for (size_t i = 0; i < n; ++i) {
        require_finite(target[i], "superpose");
        require_finite(source[i], "superpose");
        pc += target[i];
        qc += source[i];
    }
    pc = pc * (1.0 / double(n));
    qc = qc * (1.0 / double(n));

    // covariance S = sum q' p'^T over centered points
    double s[3][3] = {};
    double spread = 0;
    for (size_t i = 0; i < n; ++i) {
        const Vec3 p = target[i] - pc;
        const Vec3 q = source[i] - qc;
        spread += p.norm2() + q.norm2();
        const double qv[3] = {q.x, q.y, q.z};
        const double pv[3] = {p.x, p.y, p.z};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) s[r][c] += qv[r] * pv[c];
    }
    if (spread < kDegenerateEps)
        throw std::domain_error("superpose: all points coincident");

    // Quaternion form of the optimal-rotation problem: the rotation
    // maximizing the overlap is the top eigenvector of this symmetric
    // 4x4 matrix. A proper rotation always results.
    std::array<double, 16> k{};
    k[0] = s[0][0] + s[1][1] + s[2][2];
    k[1] = s[1][2] - s[2][1];
    k[2] = s[2][0] - s[0][2];
    k[3] = s[0][1] - s[1][0];
    k[5] = s[0][0] - s[1][1] - s[2][2];
    k[6] = s[0][1] + s[1][0];
    k[7] = s[2][0] + s[0][2];
    k[10] = -s[0][0] + s[1][1] - s[2][2];
    k[11] = s[1][2] + s[2][1];
    k[15] = -s[0][0] - s[1][1] + s[2][2];
    k[4] = k[1]; k[8] = k[2]; k[12] = k[3];
    k[9] = k[6]; k[13] = k[7]; k[14] = k[11];

    std::array<double, 4> val{};
    std::array<double, 16> vec{};
    jacobi4(k, val, vec);

    int best = 0;
    for (int i = 1; i < 4; ++i)
        if (val[i] > val[best]) best = i;

    // Ambiguous optimum (rank-deficient point sets): several eigenvalues
    // tie at the top. Tie-break by projecting the identity quaternion onto
    // the top eigenspace, which yields the identity-closest rotation.
    const double scale = std::max(1.0, std::fabs(val[best]));
    bool degen = false;
    double q[4] = {vec[0 + best], vec[4 + best], vec[8 + best], vec[12 + best]};
    {
        double proj[4] = {0, 0, 0, 0};
        bool any = false;
        for (int i = 0; i < 4; ++i) {
            if (val[i] < val[best] - 1e-9 * scale) continue;
            if (i != best) degen = true;
            const double w = vec[0 + i]; // identity component of this eigenvector
            for (int r = 0; r < 4; ++r) proj[r] += w * vec[4 * r + i];
            any = any || std::fabs(w) > 1e-9;
        }
        if (degen && any) {
            for (int r = 0; r < 4; ++r) q[r] = proj[r];
        }
    }
    if (q[0] < 0 || (q[0] == 0 && (q[1] < 0 || (q[1] == 0 && (q[2] < 0 || (q[2] == 0 && q[3] < 0))))))
        for (double& c : q) c = -c;

    Superposition out;
    out.rot = rot_from_quat(q[0], q[1], q[2], q[3]);
    out.shift = pc - out.rot.apply(qc);
    out.degenerate = degen;

    double acc = 0;
    for (size_t i = 0; i < n; ++i) {
        const Vec3 d = target[i] - (out.rot.apply(source[i]) + out.shift);
        acc += d.norm2();
    }
    out.rmsd = std::sqrt(acc / double(n));
    return out;
}

double unrotated_rmsd(std::span<const Vec3> target,
                      std::span<const Vec3> source) {
    if (target.size() != source.size())
        throw std::invalid_argument("unrotated_rmsd: size mismatch");
    const size_t n = target.size();
    Vec3 pc{}, qc{};
    for (size_t i = 0; i < n; ++i) {
        pc += target[i];
        qc += source[i];
    }
    pc = pc * (1.0 / double(n));
    qc = qc * (1.0 / double(n));
    double acc = 0;
    for (size_t i = 0; i < n; ++i) {
        const Vec3 d = (target[i] - pc) - (source[i] - qc);
        acc += d.norm2();
    }
    return std::sqrt(acc / double(n));
}

namespace {

// Shared frame construction: orthonormal (e1, e2, e3) with e1 along `axis`
// and e2 the component of `ref` perpendicular to e1.
void local_frame(const Vec3& axis, const Vec3& ref, Vec3& e1, Vec3& e2,
                 Vec3& e3, const char* what) {
    const double an = axis.norm();
    if (an * an < kDegenerateEps)
        throw std::domain_error(std::string(what) + ": coincident reference points");
    e1 = axis * (1.0 / an);
    Vec3 w = ref - e1 * ref.dot(e1);
    if (w.norm2() < kDegenerateEps)
        throw std::domain_error(std::string(what) + ": collinear reference triple");
    e2 = w * (1.0 / w.norm());
    e3 = e1.cross(e2);
}

} // namespace

Vec3 place_centroid(const Vec3& prev, const Vec3& cur, const Vec3& next,
                    double dist, double bend_deg, double torsion_deg) {
    require_finite(prev, "place_centroid");
    require_finite(cur, "place_centroid");
    require_finite(next, "place_centroid");
    Vec3 e1, e2, e3;
    local_frame(next - cur, prev - cur, e1, e2, e3, "place_centroid");
    const double b = deg2rad(bend_deg);
    const double t = deg2rad(torsion_deg);
    return cur + dist * (std::cos(b) * e1 +
                         std::sin(b) * (std::cos(t) * e2 - std::sin(t) * e3));
}

Vec3 extend_chain(const Vec3& a, const Vec3& b, const Vec3& c, double dist,
                  double bend_deg, double torsion_deg) {
    require_finite(a, "extend_chain");
    require_finite(b, "extend_chain");
    require_finite(c, "extend_chain");
    Vec3 e1, e2, e3;
    local_frame(c - b, a - b, e1, e2, e3, "extend_chain");
    const double th = deg2rad(bend_deg);
    const double ph = deg2rad(torsion_deg);
    return c + dist * (-std::cos(th) * e1 +
                       std::sin(th) * (std::cos(ph) * e2 - std::sin(ph) * e3));
}

} // namespace fragfold
