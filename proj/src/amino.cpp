#include "fragfold/amino.hpp"

#include <stdexcept>

namespace fragfold {

namespace {

struct AminoInfo {
    const char* three;
    char one;
    ClassCode cls;
};

// Enum order. Class column is the 9-class clustering table.
constexpr AminoInfo kInfo[kNumAminoAcids] = {
    {"ALA", 'A', 0}, {"ARG", 'R', 2}, {"ASN", 'N', 3}, {"ASP", 'D', 3},
    {"CYS", 'C', 6}, {"GLN", 'Q', 2}, {"GLU", 'E', 2}, {"GLY", 'G', 7},
    {"HIS", 'H', 4}, {"ILE", 'I', 5}, {"LEU", 'L', 1}, {"LYS", 'K', 2},
    {"MET", 'M', 1}, {"PHE", 'F', 4}, {"PRO", 'P', 8}, {"SER", 'S', 3},
    {"THR", 'T', 4}, {"TRP", 'W', 5}, {"TYR", 'Y', 4}, {"VAL", 'V', 5},
};

} // namespace

std::string_view three_letter(AminoAcid a) { return kInfo[size_t(a)].three; }
char one_letter(AminoAcid a) { return kInfo[size_t(a)].one; }

std::optional<AminoAcid> amino_from_three(std::string_view code) {
    for (int i = 0; i < kNumAminoAcids; ++i)
        if (code == kInfo[i].three) return AminoAcid(i);
    return std::nullopt;
}

std::optional<AminoAcid> amino_from_one(char c) {
    for (int i = 0; i < kNumAminoAcids; ++i)
        if (c == kInfo[i].one) return AminoAcid(i);
    return std::nullopt;
}

ClassCode classify(AminoAcid a) { return kInfo[size_t(a)].cls; }

namespace {

struct ClassSets {
    std::array<std::array<AminoAcid, kNumAminoAcids>, kNumClasses> members{};
    std::array<size_t, kNumClasses> counts{};
    ClassSets() {
        for (int i = 0; i < kNumAminoAcids; ++i) {
            const ClassCode c = kInfo[i].cls;
            members[c][counts[c]++] = AminoAcid(i);
        }
    }
};
const ClassSets kSets;

} // namespace

std::span<const AminoAcid> class_members(ClassCode c) {
    if (c < 0 || c >= kNumClasses)
        throw std::out_of_range("class_members: not a residue class");
    return {kSets.members[c].data(), kSets.counts[c]};
}

ClassTuple helix_tuple() {
    return {{kClassHelix, kClassHelix, kClassHelix, kClassHelix}};
}
ClassTuple strand_tuple() {
    return {{kClassStrand, kClassStrand, kClassStrand, kClassStrand}};
}
ClassTuple unknown_tuple() {
    return {{kClassUnknown, kClassUnknown, kClassUnknown, kClassUnknown}};
}

CentroidGeometry CentroidGeometry::defaults() {
    // Approximate side-chain center-of-mass statistics; replaced by
    // corpus-derived averages during a database build. GLY is absent by
    // design (centroid = Calpha).
    struct Row { AminoAcid a; double dist; };
    static constexpr Row rows[] = {
        {AminoAcid::ALA, 1.53}, {AminoAcid::ARG, 4.12}, {AminoAcid::ASN, 2.47},
        {AminoAcid::ASP, 2.46}, {AminoAcid::CYS, 2.07}, {AminoAcid::GLN, 3.12},
        {AminoAcid::GLU, 3.10}, {AminoAcid::HIS, 3.15}, {AminoAcid::ILE, 2.31},
        {AminoAcid::LEU, 2.61}, {AminoAcid::LYS, 3.52}, {AminoAcid::MET, 2.95},
        {AminoAcid::PHE, 3.41}, {AminoAcid::PRO, 1.88}, {AminoAcid::SER, 1.90},
        {AminoAcid::THR, 1.93}, {AminoAcid::TRP, 3.86}, {AminoAcid::TYR, 3.81},
        {AminoAcid::VAL, 1.97},
    };
    CentroidGeometry g;
    for (const Row& r : rows) g.set(r.a, {r.dist, 120.6, -122.5});
    return g;
}

const CentroidParams& CentroidGeometry::get(AminoAcid a) const {
    if (!set_[size_t(a)])
        throw std::out_of_range("CentroidGeometry: no entry for residue");
    return params_[size_t(a)];
}

void CentroidGeometry::set(AminoAcid a, const CentroidParams& p) {
    params_[size_t(a)] = p;
    set_[size_t(a)] = true;
}

} // namespace fragfold
