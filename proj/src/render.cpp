#include "oscm/render.hpp"

#include <sstream>

#include "oscm/propagation.hpp"

namespace oscm {

std::string render_svg(const PlacementState& state, const RenderSpec& spec) {
    if (spec.highlight) {
        for (Slot s : {spec.highlight->first, spec.highlight->second}) {
            if (!state.in_range(s) || state.is_free(s)) {
                throw Error(ErrorCode::InvalidArgument, "highlighted slot " + std::to_string(s) + " is not fulfilled");
            }
        }
    }
    const int u = spec.unit;
    const int n = state.n();
    const int width = (n + 1) * u;
    const int height = 4 * u;
    const int top = u;
    const int bottom = 3 * u;
    const int half = u / 5;
    auto x_of = [u](int i) { return i * u; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "  <defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"8\" refY=\"4\" "
          "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#1f5fbf\"/></marker></defs>\n";
    os << "  <style>.edge{stroke:#000;stroke-width:2}.highlight{stroke:#c0392b}"
          ".arrow{stroke:#1f5fbf;stroke-width:1.5;fill:none}.slot{stroke:#000;fill:#fff}"
          ".filled{fill:#000}.vertex{stroke:#000;fill:#fff}</style>\n";

    for (const auto& [s, r] : state.placed()) {
        const bool hl = spec.highlight && (s == spec.highlight->first || s == spec.highlight->second);
        for (Vertex v : {r.a, r.b}) {
            os << "  <line class=\"edge" << (hl ? " highlight" : "") << "\" x1=\"" << x_of(s) << "\" y1=\"" << top
               << "\" x2=\"" << x_of(v) << "\" y2=\"" << bottom << "\"/>\n";
        }
    }

    if (spec.show_arrows && arrows_defined(state)) {
        const auto set = arrows(state);
        for (std::size_t i = 0; i < set.arrows.size(); ++i) {
            const Arrow& a = set.arrows[i];
            // Two arrows between the same endpoints bend to opposite sides.
            const bool twin_next = i + 1 < set.arrows.size() && set.arrows[i + 1].v == a.v && set.arrows[i + 1].s == a.s;
            const bool twin_prev = i > 0 && set.arrows[i - 1].v == a.v && set.arrows[i - 1].s == a.s;
            const int bend = twin_next ? -half : (twin_prev ? half : 0);
            const int x1 = x_of(a.v);
            const int x2 = x_of(a.s);
            const int y2 = top + half;
            os << "  <path class=\"arrow\" d=\"M" << x1 << ',' << bottom << " Q" << (x1 + x2) / 2 + bend << ','
               << (bottom + y2) / 2 << ' ' << x2 << ',' << y2 << "\" marker-end=\"url(#head)\"/>\n";
        }
    }

    for (Slot s = 1; s <= n; ++s) {
        os << "  <rect class=\"slot" << (state.is_free(s) ? "" : " filled") << "\" x=\"" << x_of(s) - half
           << "\" y=\"" << top - half << "\" width=\"" << 2 * half << "\" height=\"" << 2 * half << "\"/>\n";
        os << "  <text x=\"" << x_of(s) << "\" y=\"" << top - 2 * half << "\" text-anchor=\"middle\">s" << s
           << "</text>\n";
    }
    for (Vertex v = 1; v <= n; ++v) {
        os << "  <circle class=\"vertex\" cx=\"" << x_of(v) << "\" cy=\"" << bottom << "\" r=\"" << half << "\"/>\n";
        os << "  <text x=\"" << x_of(v) << "\" y=\"" << bottom + 3 * half << "\" text-anchor=\"middle\">v" << v
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace oscm
