#pragma once

#include <array>
#include <atomic>
#include <string_view>

// Test-of-the-test hooks. Each mutant flips exactly one sign convention inside
// the predicate kernel or the self-intersection test. Production code never
// enables a mutant; the certification harness and the acceptance suite do, to
// show that their checks are sensitive to such a flip.
namespace fourvertex::mutation {

enum class Mutant {
    None,
    DetCofactor0,      // det3: flip the sign of the a.x cofactor term
    DetCofactor1,      // det3: flip the sign of the a.y cofactor term
    DetCofactor2,      // det3: flip the sign of the a.z cofactor term
    SameSideInverted,  // same_side answers "different sides"
    ArcTerm0,          // arcs_intersect: negate s[i,i+1,j]
    ArcTerm1,          // arcs_intersect: negate s[i+1,j,j+1]
    ArcTerm2,          // arcs_intersect: negate s[i,i+1,j+1]
    ArcTerm3,          // arcs_intersect: negate s[i,j,j+1]
    ArcRelation,       // arcs_intersect: require the two pairs to agree instead of differ
    OrientationMirror, // orientation: negate every answer (a reflection of R^3)
};

inline constexpr std::array kAllMutants{
    Mutant::DetCofactor0, Mutant::DetCofactor1, Mutant::DetCofactor2,
    Mutant::SameSideInverted, Mutant::ArcTerm0, Mutant::ArcTerm1,
    Mutant::ArcTerm2, Mutant::ArcTerm3, Mutant::ArcRelation,
    Mutant::OrientationMirror,
};

inline std::atomic<Mutant> g_active{Mutant::None};

inline Mutant active() noexcept { return g_active.load(std::memory_order_relaxed); }
inline bool is_active(Mutant m) noexcept { return active() == m; }

std::string_view name(Mutant m);
bool parse(std::string_view text, Mutant& out);

/// True for mutants that every consistency check is blind to by construction:
/// negating all orientations is the same as mirroring the input, and every
/// statement checked here is mirror invariant.
inline bool is_symmetry(Mutant m) { return m == Mutant::OrientationMirror; }

class ScopedMutant {
public:
    explicit ScopedMutant(Mutant m) : previous_(g_active.exchange(m)) {}
    ~ScopedMutant() { g_active.store(previous_); }
    ScopedMutant(const ScopedMutant&) = delete;
    ScopedMutant& operator=(const ScopedMutant&) = delete;

private:
    Mutant previous_;
};

}  // namespace fourvertex::mutation
