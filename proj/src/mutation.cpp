#include "fourvertex/mutation.h"

namespace fourvertex::mutation {

std::string_view name(Mutant m) {
    switch (m) {
        case Mutant::None: return "none";
        case Mutant::DetCofactor0: return "det-cofactor-0";
        case Mutant::DetCofactor1: return "det-cofactor-1";
        case Mutant::DetCofactor2: return "det-cofactor-2";
        case Mutant::SameSideInverted: return "same-side-inverted";
        case Mutant::ArcTerm0: return "arc-term-0";
        case Mutant::ArcTerm1: return "arc-term-1";
        case Mutant::ArcTerm2: return "arc-term-2";
        case Mutant::ArcTerm3: return "arc-term-3";
        case Mutant::ArcRelation: return "arc-relation";
        case Mutant::OrientationMirror: return "orientation-mirror";
    }
    return "unknown";
}

bool parse(std::string_view text, Mutant& out) {
    if (text == name(Mutant::None)) {
        out = Mutant::None;
        return true;
    }
    for (Mutant m : kAllMutants) {
        if (text == name(m)) {
            out = m;
            return true;
        }
    }
    return false;
}

}  // namespace fourvertex::mutation
