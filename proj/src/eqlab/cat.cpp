#include "eqlab/cat.hpp"

namespace eqlab {

std::vector<LawViolation> audit_category_laws(const FiniteCategory& cat) {
  std::vector<LawViolation> report;
  const auto& arrows = cat.arrows;
  auto composite = [&](std::size_t g, std::size_t f) -> std::optional<std::size_t> {
    auto it = cat.compose.find({g, f});
    if (it == cat.compose.end()) return std::nullopt;
    return it->second;
  };

  for (std::size_t a = 0; a < cat.identity.size(); ++a) {
    const auto& id = arrows[cat.identity[a]];
    if (id.source != a || id.target != a) {
      report.push_back({"identity-typing", {cat.identity[a]}, "identity of object " + cat.objects[a]});
    }
  }
  for (std::size_t f = 0; f < arrows.size(); ++f) {
    for (std::size_t g = 0; g < arrows.size(); ++g) {
      if (arrows[f].target != arrows[g].source) continue;
      auto gf = composite(g, f);
      if (!gf) {
        report.push_back({"composite-missing", {g, f}, ""});
        continue;
      }
      if (arrows[*gf].source != arrows[f].source || arrows[*gf].target != arrows[g].target) {
        report.push_back({"composite-typing", {g, f}, ""});
      }
    }
  }
  for (std::size_t f = 0; f < arrows.size(); ++f) {
    auto left = composite(cat.identity[arrows[f].target], f);
    auto right = composite(f, cat.identity[arrows[f].source]);
    if (!left || *left != f) report.push_back({"left-unit", {f}, ""});
    if (!right || *right != f) report.push_back({"right-unit", {f}, ""});
  }
  for (std::size_t f = 0; f < arrows.size(); ++f) {
    for (std::size_t g = 0; g < arrows.size(); ++g) {
      if (arrows[f].target != arrows[g].source) continue;
      auto gf = composite(g, f);
      for (std::size_t h = 0; h < arrows.size(); ++h) {
        if (arrows[g].target != arrows[h].source) continue;
        auto hg = composite(h, g);
        if (!gf || !hg) continue;
        auto lhs = composite(h, *gf);
        auto rhs = composite(*hg, f);
        if (!lhs || !rhs || *lhs != *rhs) {
          report.push_back({"associativity", {h, g, f},
                            arrows[h].label + " . " + arrows[g].label + " . " + arrows[f].label});
        }
      }
    }
  }
  return report;
}

}  // namespace eqlab
