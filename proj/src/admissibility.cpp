#include "sepcodes/admissibility.hpp"

namespace sepcodes {

bool AdmissibilityReport::admissible(SeparationKind s) const noexcept {
    switch (s) {
        case SeparationKind::L: return true;
        case SeparationKind::O: return open_twins.empty();
        case SeparationKind::I: return closed_twins.empty();
        case SeparationKind::F: return open_twins.empty() && closed_twins.empty();
    }
    return false;
}

bool AdmissibilityReport::admissible(DominationKind d) const noexcept {
    return d == DominationKind::D || !has_isolated();
}

bool AdmissibilityReport::admissible(CodeKind x) const noexcept {
    const auto s = separation_of(x);
    return admissible(domination_of(x)) && (!s || admissible(*s));
}

AdmissibilityReport detect_twins(const Graph& g) {
    AdmissibilityReport report;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 0) {
            report.isolated = v;
            break;
        }
    }
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) {
                if (closed_neighborhood(g, u) == closed_neighborhood(g, v)) {
                    report.closed_twins.emplace_back(u, v);
                }
            } else if (g.neighbors(u) == g.neighbors(v)) {
                report.open_twins.emplace_back(u, v);
            }
        }
    }
    return report;
}

}  // namespace sepcodes
