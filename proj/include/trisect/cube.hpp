#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "trisect/group.hpp"

namespace trisect {

enum class CubeVertex : std::size_t {
  Surface,
  HandlebodyAlpha,
  HandlebodyBeta,
  HandlebodyGamma,
  SectorAlphaBeta,
  SectorBetaGamma,
  SectorGammaAlpha,
  Total,
};

inline constexpr std::size_t kCubeVertexCount = 8;

std::string_view vertex_name(CubeVertex v);

// A homomorphism given by the images of the source generators, as words in the target's.
struct CubeMap {
  CubeVertex source;
  CubeVertex target;
  std::vector<Relator> images;
};

struct GroupTrisectionCube {
  std::array<Presentation, kCubeVertexCount> vertices;
  std::vector<CubeMap> edges;

  const Presentation& vertex(CubeVertex v) const { return vertices[static_cast<std::size_t>(v)]; }
  Presentation& vertex(CubeVertex v) { return vertices[static_cast<std::size_t>(v)]; }
};

// The twelve (source, target) pairs, surface first and total last.
const std::array<std::pair<CubeVertex, CubeVertex>, 12>& cube_edges();

// Square faces as (apex, left, right, opposite): apex maps to left and right, both map to opposite.
const std::array<std::array<CubeVertex, 4>, 6>& cube_faces();

// Handlebody vertices adjoin one family to the surface relation, sectors two, the total all
// three. Maps send each generator to its namesake. Throws NotHomologicallyStandard when a
// Heegaard pair is not.
GroupTrisectionCube build_cube(const TrisectionDiagram& d);

class CubeShapeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

enum class CheckStatus { Verified, HomologicallyVerified, Failed };

std::string_view status_name(CheckStatus s);

struct MapCheck {
  CubeVertex source;
  CubeVertex target;
  CheckStatus status;
  std::string detail;
};

struct FaceCheck {
  std::array<CubeVertex, 4> face;
  CheckStatus status;
  std::string detail;
};

struct CubeReport {
  std::vector<MapCheck> maps;
  std::vector<FaceCheck> faces;

  std::size_t count_faces(CheckStatus s) const;
  std::size_t count_maps(CheckStatus s) const;
};

// Checks surjectivity of every map and that every face is a pushout. Tietze work per
// presentation is limited by `budget`. Throws CubeShapeError for a malformed cube.
CubeReport verify_cube(const GroupTrisectionCube& cube, std::size_t budget);

// Presentation of the pushout of left <- apex -> right along the given maps.
Presentation pushout_presentation(const Presentation& left, const Presentation& right,
                                  const CubeMap& to_left, const CubeMap& to_right);

}  // namespace trisect
