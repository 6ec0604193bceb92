#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace sepcodes {

enum class SeparationKind { L, O, I, F };
enum class DominationKind { D, TD };

/// D and TD are pure domination; the other eight pair a separation with a domination.
enum class CodeKind { D, TD, LD, LTD, OD, OTD, ID, ITD, FD, FTD };

inline constexpr std::array<SeparationKind, 4> kAllSeparations{
    SeparationKind::L, SeparationKind::O, SeparationKind::I, SeparationKind::F};

inline constexpr std::array<DominationKind, 2> kAllDominations{DominationKind::D, DominationKind::TD};

inline constexpr std::array<CodeKind, 10> kAllCodes{
    CodeKind::D,  CodeKind::TD,  CodeKind::LD, CodeKind::LTD, CodeKind::OD,
    CodeKind::OTD, CodeKind::ID, CodeKind::ITD, CodeKind::FD, CodeKind::FTD};

std::optional<SeparationKind> separation_of(CodeKind x) noexcept;
DominationKind domination_of(CodeKind x) noexcept;
CodeKind combine(SeparationKind s, DominationKind d) noexcept;
CodeKind code_of(DominationKind d) noexcept;

std::string_view to_string(SeparationKind s) noexcept;
std::string_view to_string(DominationKind d) noexcept;
std::string_view to_string(CodeKind x) noexcept;

/// Throws InputError on unknown names.
SeparationKind parse_separation(std::string_view name);
CodeKind parse_code(std::string_view name);

/// Any of the 14 kind names ("L".."F", "D", "TD", "LD".."FTD").
struct AnyKind {
    std::optional<SeparationKind> separation;
    std::optional<CodeKind> code;
};
AnyKind parse_any_kind(std::string_view name);

}  // namespace sepcodes
