#include "sepcodes/kinds.hpp"

#include <string>

#include "sepcodes/errors.hpp"

namespace sepcodes {

std::optional<SeparationKind> separation_of(CodeKind x) noexcept {
    switch (x) {
        case CodeKind::LD:
        case CodeKind::LTD: return SeparationKind::L;
        case CodeKind::OD:
        case CodeKind::OTD: return SeparationKind::O;
        case CodeKind::ID:
        case CodeKind::ITD: return SeparationKind::I;
        case CodeKind::FD:
        case CodeKind::FTD: return SeparationKind::F;
        default: return std::nullopt;
    }
}

DominationKind domination_of(CodeKind x) noexcept {
    switch (x) {
        case CodeKind::TD:
        case CodeKind::LTD:
        case CodeKind::OTD:
        case CodeKind::ITD:
        case CodeKind::FTD: return DominationKind::TD;
        default: return DominationKind::D;
    }
}

CodeKind combine(SeparationKind s, DominationKind d) noexcept {
    const bool total = d == DominationKind::TD;
    switch (s) {
        case SeparationKind::L: return total ? CodeKind::LTD : CodeKind::LD;
        case SeparationKind::O: return total ? CodeKind::OTD : CodeKind::OD;
        case SeparationKind::I: return total ? CodeKind::ITD : CodeKind::ID;
        case SeparationKind::F: return total ? CodeKind::FTD : CodeKind::FD;
    }
    return CodeKind::D;
}

CodeKind code_of(DominationKind d) noexcept { return d == DominationKind::TD ? CodeKind::TD : CodeKind::D; }

std::string_view to_string(SeparationKind s) noexcept {
    switch (s) {
        case SeparationKind::L: return "L";
        case SeparationKind::O: return "O";
        case SeparationKind::I: return "I";
        case SeparationKind::F: return "F";
    }
    return "?";
}

std::string_view to_string(DominationKind d) noexcept { return d == DominationKind::TD ? "TD" : "D"; }

std::string_view to_string(CodeKind x) noexcept {
    switch (x) {
        case CodeKind::D: return "D";
        case CodeKind::TD: return "TD";
        case CodeKind::LD: return "LD";
        case CodeKind::LTD: return "LTD";
        case CodeKind::OD: return "OD";
        case CodeKind::OTD: return "OTD";
        case CodeKind::ID: return "ID";
        case CodeKind::ITD: return "ITD";
        case CodeKind::FD: return "FD";
        case CodeKind::FTD: return "FTD";
    }
    return "?";
}

SeparationKind parse_separation(std::string_view name) {
    for (auto s : kAllSeparations) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw InputError("unknown separation kind \"" + std::string(name) + "\"");
}

CodeKind parse_code(std::string_view name) {
    for (auto x : kAllCodes) {
        if (to_string(x) == name) {
            return x;
        }
    }
    throw InputError("unknown code kind \"" + std::string(name) + "\"");
}

AnyKind parse_any_kind(std::string_view name) {
    for (auto s : kAllSeparations) {
        if (to_string(s) == name) {
            return {s, std::nullopt};
        }
    }
    for (auto x : kAllCodes) {
        if (to_string(x) == name) {
            return {std::nullopt, x};
        }
    }
    throw InputError("unknown kind \"" + std::string(name) + "\"");
}

}  // namespace sepcodes
