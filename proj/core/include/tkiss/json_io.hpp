#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tkiss/verifier.hpp"

namespace tkiss {

inline constexpr std::string_view kSchemaVersion = "tk-1";

/// On-disk form of a shape, optionally placed as a scene and optionally
/// carrying a verification certificate.
///
/// offsets is empty for a bare shape; otherwise it holds t_0..t_n. A
/// certificate requires offsets and repeats them.
struct SceneDocument {
  std::string schema_version{kSchemaVersion};
  Shape shape;
  std::vector<Vec2> offsets;
  std::optional<Certificate> certificate;

  friend bool operator==(const SceneDocument&, const SceneDocument&) = default;
};

SceneDocument make_shape_document(Shape shape);
SceneDocument make_certificate_document(const Scene& scene, Certificate certificate);

/// Canonical JSON: fixed key order, fixed line layout, pieces in construction
/// order, trailing newline. Equal documents give identical bytes.
std::string serialize(const SceneDocument& doc);

/// Parses and validates a document.
///
/// Throws MalformedDocument for invalid JSON or a wrong structure,
/// SchemaVersionMismatch for a version other than "tk-1", and
/// InvariantViolation when the content breaks a shape, scene, contact or
/// certificate invariant.
SceneDocument parse(std::string_view text);

/// Whole-file helpers; throw IoError on filesystem failures.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

} // namespace tkiss
