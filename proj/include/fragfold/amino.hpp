/* Amino acid identities, the 9-class clustering used to index fragments,
 * and the per-residue side-chain centroid geometry parameters. */
#ifndef FRAGFOLD_AMINO_HPP
#define FRAGFOLD_AMINO_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace fragfold {

enum class AminoAcid : uint8_t {
    ALA, ARG, ASN, ASP, CYS, GLN, GLU, GLY, HIS, ILE,
    LEU, LYS, MET, PHE, PRO, SER, THR, TRP, TYR, VAL,
};
constexpr int kNumAminoAcids = 20;

std::string_view three_letter(AminoAcid a);
char one_letter(AminoAcid a);
std::optional<AminoAcid> amino_from_three(std::string_view code);
std::optional<AminoAcid> amino_from_one(char c);

/// Class codes: 0..8 are the residue classes, negative values are the
/// special homogeneous tuples (-1 unknown fallback, -2 helix, -3 strand).
using ClassCode = int8_t;
constexpr ClassCode kClassUnknown = -1;
constexpr ClassCode kClassHelix = -2;
constexpr ClassCode kClassStrand = -3;
constexpr int kNumClasses = 9;

/// The residue -> class mapping. ALA->0, LEU/MET->1, ARG/GLU/GLN/LYS->2,
/// ASN/ASP/SER->3, THR/PHE/HIS/TYR->4, ILE/VAL/TRP->5, CYS->6, GLY->7,
/// PRO->8.
ClassCode classify(AminoAcid a);

/// Members of one class, in enum order.
std::span<const AminoAcid> class_members(ClassCode c);

/// A fragment window is keyed by the classes of its four residues.
struct ClassTuple {
    std::array<ClassCode, 4> g{0, 0, 0, 0};
    bool operator==(const ClassTuple&) const = default;
    auto operator<=>(const ClassTuple&) const = default;
    bool is_special() const { return g[0] < 0; }
};

ClassTuple helix_tuple();
ClassTuple strand_tuple();
ClassTuple unknown_tuple();

/// Per-residue parameters that place the side-chain centroid from the
/// three reference backbone positions: distance from the central Calpha,
/// bend angle (centroid, Ca_i, Ca_i+1) and torsion
/// (Ca_i-1, Ca_i, Ca_i+1, centroid). GLY has no side chain; its centroid
/// is the Calpha itself and it carries no entry here.
struct CentroidParams {
    double dist = 0.0;    // Angstrom, > 0
    double bend = 0.0;    // degrees, (0, 180)
    double torsion = 0.0; // degrees, (-180, 180]
};

class CentroidGeometry {
public:
    /// Statistical defaults; superseded by corpus-derived values when a
    /// database is built.
    static CentroidGeometry defaults();

    bool has(AminoAcid a) const { return set_[size_t(a)]; }
    const CentroidParams& get(AminoAcid a) const;
    void set(AminoAcid a, const CentroidParams& p);

private:
    std::array<CentroidParams, kNumAminoAcids> params_{};
    std::array<bool, kNumAminoAcids> set_{};
};

} // namespace fragfold

#endif
