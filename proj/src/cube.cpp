#include "trisect/cube.hpp"

#include <algorithm>
#include <optional>

#include "trisect/invariants.hpp"

namespace trisect {

std::string_view vertex_name(CubeVertex v) {
  switch (v) {
    case CubeVertex::Surface: return "surface";
    case CubeVertex::HandlebodyAlpha: return "handlebody_alpha";
    case CubeVertex::HandlebodyBeta: return "handlebody_beta";
    case CubeVertex::HandlebodyGamma: return "handlebody_gamma";
    case CubeVertex::SectorAlphaBeta: return "sector_alpha_beta";
    case CubeVertex::SectorBetaGamma: return "sector_beta_gamma";
    case CubeVertex::SectorGammaAlpha: return "sector_gamma_alpha";
    case CubeVertex::Total: return "total";
  }
  return "?";
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Verified: return "Verified";
    case CheckStatus::HomologicallyVerified: return "HomologicallyVerified";
    case CheckStatus::Failed: return "Failed";
  }
  return "?";
}

const std::array<std::pair<CubeVertex, CubeVertex>, 12>& cube_edges() {
  using V = CubeVertex;
  static const std::array<std::pair<V, V>, 12> edges = {{
      {V::Surface, V::HandlebodyAlpha},
      {V::Surface, V::HandlebodyBeta},
      {V::Surface, V::HandlebodyGamma},
      {V::HandlebodyAlpha, V::SectorAlphaBeta},
      {V::HandlebodyAlpha, V::SectorGammaAlpha},
      {V::HandlebodyBeta, V::SectorAlphaBeta},
      {V::HandlebodyBeta, V::SectorBetaGamma},
      {V::HandlebodyGamma, V::SectorBetaGamma},
      {V::HandlebodyGamma, V::SectorGammaAlpha},
      {V::SectorAlphaBeta, V::Total},
      {V::SectorBetaGamma, V::Total},
      {V::SectorGammaAlpha, V::Total},
  }};
  return edges;
}

const std::array<std::array<CubeVertex, 4>, 6>& cube_faces() {
  using V = CubeVertex;
  static const std::array<std::array<V, 4>, 6> faces = {{
      {V::Surface, V::HandlebodyAlpha, V::HandlebodyBeta, V::SectorAlphaBeta},
      {V::Surface, V::HandlebodyBeta, V::HandlebodyGamma, V::SectorBetaGamma},
      {V::Surface, V::HandlebodyGamma, V::HandlebodyAlpha, V::SectorGammaAlpha},
      {V::HandlebodyAlpha, V::SectorAlphaBeta, V::SectorGammaAlpha, V::Total},
      {V::HandlebodyBeta, V::SectorBetaGamma, V::SectorAlphaBeta, V::Total},
      {V::HandlebodyGamma, V::SectorGammaAlpha, V::SectorBetaGamma, V::Total},
  }};
  return faces;
}

GroupTrisectionCube build_cube(const TrisectionDiagram& d) {
  pair_ks(d);

  const int g = d.genus();
  const CutSystem* a = &d.alpha();
  const CutSystem* b = &d.beta();
  const CutSystem* c = &d.gamma();
  GroupTrisectionCube cube;
  cube.vertex(CubeVertex::Surface) = surface_quotient(g, {});
  cube.vertex(CubeVertex::HandlebodyAlpha) = surface_quotient(g, {a});
  cube.vertex(CubeVertex::HandlebodyBeta) = surface_quotient(g, {b});
  cube.vertex(CubeVertex::HandlebodyGamma) = surface_quotient(g, {c});
  cube.vertex(CubeVertex::SectorAlphaBeta) = surface_quotient(g, {a, b});
  cube.vertex(CubeVertex::SectorBetaGamma) = surface_quotient(g, {b, c});
  cube.vertex(CubeVertex::SectorGammaAlpha) = surface_quotient(g, {c, a});
  cube.vertex(CubeVertex::Total) = surface_quotient(g, {a, b, c});

  std::vector<Relator> identity;
  for (std::size_t k = 0; k < static_cast<std::size_t>(2 * g); ++k) identity.push_back({generator_letter(k)});
  for (const auto& [source, target] : cube_edges()) cube.edges.push_back({source, target, identity});
  return cube;
}

std::size_t CubeReport::count_faces(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(faces.begin(), faces.end(), [s](const FaceCheck& f) { return f.status == s; }));
}

std::size_t CubeReport::count_maps(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(maps.begin(), maps.end(), [s](const MapCheck& m) { return m.status == s; }));
}

namespace {

Relator apply_map(const std::vector<Relator>& images, const Relator& word) {
  Relator out;
  for (Letter l : word) {
    const Relator& image = images[letter_generator(l)];
    if (l > 0) {
      out.insert(out.end(), image.begin(), image.end());
    } else {
      const Relator inverse = invert_relator(image);
      out.insert(out.end(), inverse.begin(), inverse.end());
    }
  }
  return reduce_relator(std::move(out), false);
}

IntVector exponent_vector(const Relator& r, std::size_t generators) {
  IntVector v(generators, 0);
  for (Letter l : r) v[letter_generator(l)] += l > 0 ? 1 : -1;
  return v;
}

const CubeMap& find_map(const GroupTrisectionCube& cube, CubeVertex source, CubeVertex target) {
  for (const auto& m : cube.edges)
    if (m.source == source && m.target == target) return m;
  throw CubeShapeError("missing map " + std::string(vertex_name(source)) + " -> " +
                       std::string(vertex_name(target)));
}

void check_shape(const GroupTrisectionCube& cube) {
  for (const auto& p : cube.vertices) p.check();
  if (cube.edges.size() != cube_edges().size()) {
    throw CubeShapeError("cube has " + std::to_string(cube.edges.size()) + " maps, expected 12");
  }
  for (const auto& [source, target] : cube_edges()) {
    const auto n = std::count_if(cube.edges.begin(), cube.edges.end(), [&](const CubeMap& m) {
      return m.source == source && m.target == target;
    });
    if (n != 1) {
      throw CubeShapeError("expected exactly one map " + std::string(vertex_name(source)) + " -> " +
                           std::string(vertex_name(target)));
    }
  }
  for (const auto& m : cube.edges) {
    const auto& src = cube.vertex(m.source);
    const auto& dst = cube.vertex(m.target);
    if (m.images.size() != src.generator_count()) {
      throw CubeShapeError("map " + std::string(vertex_name(m.source)) + " -> " +
                           std::string(vertex_name(m.target)) + " does not give one image per generator");
    }
    for (const auto& image : m.images)
      for (Letter l : image)
        if (l == 0 || letter_generator(l) >= dst.generator_count()) {
          throw CubeShapeError("map " + std::string(vertex_name(m.source)) + " -> " +
                               std::string(vertex_name(m.target)) + " uses a letter outside the target");
        }
  }
}

MapCheck check_map(const GroupTrisectionCube& cube, const CubeMap& m) {
  const auto& src = cube.vertex(m.source);
  const auto& dst = cube.vertex(m.target);
  const std::size_t n = dst.generator_count();
  const IntMatrix relations = relator_matrix(dst);

  for (const auto& r : src.relators) {
    if (!lattice_contains(relations, exponent_vector(apply_map(m.images, r), n))) {
      return {m.source, m.target, CheckStatus::Failed,
              "relator " + src.format(r) + " does not map into the target relations"};
    }
  }
  IntMatrix image_lattice(0, n);
  for (const auto& image : m.images) image_lattice.append_row(exponent_vector(image, n));
  if (!quotient_invariants(n, image_lattice.stacked(relations)).is_trivial()) {
    return {m.source, m.target, CheckStatus::Failed, "not surjective on abelianizations"};
  }
  std::vector<bool> hit(n, false);
  for (const auto& image : m.images)
    if (image.size() == 1) hit[letter_generator(image[0])] = true;
  if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
    return {m.source, m.target, CheckStatus::Verified, "every target generator is an image"};
  }
  return {m.source, m.target, CheckStatus::HomologicallyVerified, "surjective on abelianizations"};
}

FaceCheck check_face(const GroupTrisectionCube& cube, const std::array<CubeVertex, 4>& face,
                     std::size_t budget) {
  const auto [apex, left, right, opposite] = face;
  const CubeMap& to_left = find_map(cube, apex, left);
  const CubeMap& to_right = find_map(cube, apex, right);
  const CubeMap& left_out = find_map(cube, left, opposite);
  const CubeMap& right_out = find_map(cube, right, opposite);
  const Presentation& target = cube.vertex(opposite);
  const std::size_t n = target.generator_count();
  const IntMatrix relations = relator_matrix(target);

  for (std::size_t s = 0; s < cube.vertex(apex).generator_count(); ++s) {
    const Relator via_left = apply_map(left_out.images, to_left.images[s]);
    const Relator via_right = apply_map(right_out.images, to_right.images[s]);
    const IntVector difference = exponent_vector(via_left, n) + (-exponent_vector(via_right, n));
    if (!lattice_contains(relations, difference)) {
      return {face, CheckStatus::Failed, "square does not commute on abelianizations"};
    }
  }

  const Presentation pushout = pushout_presentation(cube.vertex(left), cube.vertex(right), to_left, to_right);
  const QuotientInvariants pushout_ab = abelianize_presentation(pushout);
  const QuotientInvariants target_ab = abelianize_presentation(target);
  if (pushout_ab != target_ab) {
    return {face, CheckStatus::Failed,
            "pushout abelianizes to " + pushout_ab.to_string() + ", vertex to " + target_ab.to_string()};
  }
  const Presentation p = canonical_form(tietze_simplify(pushout, budget));
  const Presentation q = canonical_form(tietze_simplify(target, budget));
  if (p == q) return {face, CheckStatus::Verified, "pushout and vertex simplify to " + p.to_string()};
  return {face, CheckStatus::HomologicallyVerified,
          "abelianizations agree (" + target_ab.to_string() + "), simplified presentations differ"};
}

}  // namespace

Presentation pushout_presentation(const Presentation& left, const Presentation& right,
                                  const CubeMap& to_left, const CubeMap& to_right) {
  if (to_left.images.size() != to_right.images.size()) {
    throw CubeShapeError("pushout legs have different sources");
  }
  const std::size_t shift = left.generator_count();
  auto shifted = [shift](const Relator& r) {
    Relator out;
    for (Letter l : r) out.push_back(generator_letter(letter_generator(l) + shift, l < 0));
    return out;
  };

  Presentation p;
  p.generators = left.generators;
  for (const auto& name : right.generators) p.generators.push_back(name + "'");
  p.relators = left.relators;
  for (const auto& r : right.relators) p.relators.push_back(shifted(r));
  for (std::size_t s = 0; s < to_left.images.size(); ++s) {
    Relator link = to_left.images[s];
    const Relator back = invert_relator(shifted(to_right.images[s]));
    link.insert(link.end(), back.begin(), back.end());
    link = reduce_relator(std::move(link), true);
    if (!link.empty()) p.relators.push_back(std::move(link));
  }
  return p;
}

CubeReport verify_cube(const GroupTrisectionCube& cube, std::size_t budget) {
  check_shape(cube);
  CubeReport report;
  for (const auto& [source, target] : cube_edges()) report.maps.push_back(check_map(cube, find_map(cube, source, target)));
  for (const auto& face : cube_faces()) report.faces.push_back(check_face(cube, face, budget));
  return report;
}

}  // namespace trisect
