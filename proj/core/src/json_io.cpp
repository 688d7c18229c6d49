#include "tkiss/json_io.hpp"

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "json.hpp"

namespace tkiss {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

SceneDocument make_shape_document(Shape shape) {
  return SceneDocument{std::string(kSchemaVersion), std::move(shape), {}, std::nullopt};
}

SceneDocument make_certificate_document(const Scene& scene, Certificate certificate) {
  return SceneDocument{std::string(kSchemaVersion), scene.shape(), scene.offsets(), std::move(certificate)};
}

// ---------------------------------------------------------------------------
// Writing

namespace {

ordered point_json(Point p) { return ordered::array({p.x, p.y}); }

ordered piece_json(const Piece& p) {
  ordered o;
  o["role"] = std::string(to_string(p.role));
  o["index"] = p.index;
  o["rect"] = ordered::array({p.rect.x0(), p.rect.x1(), p.rect.y0(), p.rect.y1()});
  return o;
}

ordered contact_json(const ContactComponent& c) {
  ordered o;
  o["kind"] = std::string(to_string(c.kind));
  o["a"] = point_json(c.a);
  o["b"] = point_json(c.b);
  o["length"] = c.length;
  return o;
}

ordered pair_json(const PairVerdict& v) {
  ordered o;
  o["i"] = v.i;
  o["j"] = v.j;
  o["interiors_disjoint"] = v.interiors_disjoint;
  o["segment_length_total"] = v.segment_length_total;
  o["contacts"] = ordered::array();
  for (const auto& c : v.contacts) {
    o["contacts"].push_back(contact_json(c));
  }
  return o;
}

// One element per line inside an indented array.
template <typename Range, typename ToJson>
void write_array(std::ostringstream& out, const Range& items, ToJson to_json, const std::string& indent) {
  if (std::begin(items) == std::end(items)) {
    out << "[]";
    return;
  }
  out << "[\n";
  bool first = true;
  for (const auto& item : items) {
    if (!first) {
      out << ",\n";
    }
    first = false;
    out << indent << "  " << to_json(item).dump();
  }
  out << "\n" << indent << "]";
}

} // namespace

std::string serialize(const SceneDocument& doc) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << json(doc.schema_version).dump() << ",\n";
  out << "  \"m\": " << doc.shape.m() << ",\n";
  out << "  \"n\": " << doc.shape.n() << ",\n";
  out << "  \"pieces\": ";
  write_array(out, doc.shape.pieces(), piece_json, "  ");
  out << ",\n  \"offsets\": ";
  ordered offsets = ordered::array();
  for (const Vec2& v : doc.offsets) {
    offsets.push_back(ordered::array({v.dx, v.dy}));
  }
  out << offsets.dump();
  if (doc.certificate) {
    const Certificate& c = *doc.certificate;
    out << ",\n  \"certificate\": {\n";
    out << "    \"ok\": " << (c.ok ? "true" : "false") << ",\n";
    out << "    \"touching_count\": " << c.touching_count << ",\n";
    out << "    \"pairs\": ";
    write_array(out, c.pair_verdicts, pair_json, "    ");
    out << "\n  }";
  }
  out << "\n}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Reading

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedDocument(what); }

void require_keys(const json& obj, const std::string& where, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional = {}) {
  if (!obj.is_object()) {
    malformed(where + ": expected an object");
  }
  for (auto key : required) {
    if (!obj.contains(std::string(key))) {
      malformed(where + ": missing key \"" + std::string(key) + "\"");
    }
  }
  std::set<std::string_view> known(required);
  known.insert(optional.begin(), optional.end());
  for (const auto& [key, value] : obj.items()) {
    if (!known.contains(key)) {
      malformed(where + ": unknown key \"" + key + "\"");
    }
  }
}

Int get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) {
    malformed(where + ": expected an integer");
  }
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    malformed(where + ": integer out of range");
  }
  return j.get<Int>();
}

bool get_bool(const json& j, const std::string& where) {
  if (!j.is_boolean()) {
    malformed(where + ": expected a boolean");
  }
  return j.get<bool>();
}

const json& get_array(const json& j, const std::string& where, std::optional<std::size_t> size = {}) {
  if (!j.is_array()) {
    malformed(where + ": expected an array");
  }
  if (size && j.size() != *size) {
    malformed(where + ": expected " + std::to_string(*size) + " elements");
  }
  return j;
}

Point get_point(const json& j, const std::string& where) {
  get_array(j, where, 2);
  return {get_int(j[0], where + "[0]"), get_int(j[1], where + "[1]")};
}

Piece get_piece(const json& j, const std::string& where) {
  require_keys(j, where, {"role", "index", "rect"});
  if (!j["role"].is_string()) {
    malformed(where + ".role: expected a string");
  }
  const auto role_name = j["role"].get<std::string>();
  PieceRole role;
  if (role_name == "bar") {
    role = PieceRole::bar;
  } else if (role_name == "connector") {
    role = PieceRole::connector;
  } else {
    malformed(where + ".role: unknown role \"" + role_name + "\"");
  }
  const json& r = get_array(j["rect"], where + ".rect", 4);
  const Int x0 = get_int(r[0], where + ".rect[0]");
  const Int x1 = get_int(r[1], where + ".rect[1]");
  const Int y0 = get_int(r[2], where + ".rect[2]");
  const Int y1 = get_int(r[3], where + ".rect[3]");
  return Piece{role, get_int(j["index"], where + ".index"), Rect(x0, x1, y0, y1)};
}

ContactComponent get_contact(const json& j, const std::string& where) {
  require_keys(j, where, {"kind", "a", "b", "length"});
  if (!j["kind"].is_string()) {
    malformed(where + ".kind: expected a string");
  }
  const auto name = j["kind"].get<std::string>();
  ContactComponent c;
  if (name == "point") {
    c.kind = ContactKind::point;
  } else if (name == "horizontal-segment") {
    c.kind = ContactKind::horizontal_segment;
  } else if (name == "vertical-segment") {
    c.kind = ContactKind::vertical_segment;
  } else {
    malformed(where + ".kind: unknown kind \"" + name + "\"");
  }
  c.a = get_point(j["a"], where + ".a");
  c.b = get_point(j["b"], where + ".b");
  c.length = get_int(j["length"], where + ".length");

  bool valid = false;
  switch (c.kind) {
  case ContactKind::point:
    valid = c.a == c.b && c.length == 0;
    break;
  case ContactKind::horizontal_segment:
    valid = c.a.y == c.b.y && c.a.x < c.b.x && c.length == c.b.x - c.a.x;
    break;
  case ContactKind::vertical_segment:
    valid = c.a.x == c.b.x && c.a.y < c.b.y && c.length == c.b.y - c.a.y;
    break;
  }
  if (!valid) {
    throw InvariantViolation(where + ": inconsistent " + name + " contact");
  }
  return c;
}

PairVerdict get_pair(const json& j, const std::string& where) {
  require_keys(j, where, {"i", "j", "interiors_disjoint", "segment_length_total", "contacts"});
  PairVerdict v;
  v.i = get_int(j["i"], where + ".i");
  v.j = get_int(j["j"], where + ".j");
  v.interiors_disjoint = get_bool(j["interiors_disjoint"], where + ".interiors_disjoint");
  v.segment_length_total = get_int(j["segment_length_total"], where + ".segment_length_total");
  const json& contacts = get_array(j["contacts"], where + ".contacts");
  for (std::size_t k = 0; k < contacts.size(); ++k) {
    v.contacts.push_back(get_contact(contacts[k], where + ".contacts[" + std::to_string(k) + "]"));
  }
  if (!v.contacts.empty() && !v.interiors_disjoint) {
    throw InvariantViolation(where + ": contacts reported for an overlapping pair");
  }
  if (v.segment_length_total != total_segment_length(v.contacts)) {
    throw InvariantViolation(where + ": segment_length_total does not match contacts");
  }
  return v;
}

Certificate get_certificate(const json& j, const Shape& shape, const std::vector<Vec2>& offsets) {
  require_keys(j, "certificate", {"ok", "touching_count", "pairs"});
  if (offsets.empty()) {
    throw InvariantViolation("certificate without offsets");
  }
  Certificate c;
  c.m = shape.m();
  c.n = shape.n();
  c.offsets = offsets;
  c.ok = get_bool(j["ok"], "certificate.ok");
  c.touching_count = get_int(j["touching_count"], "certificate.touching_count");
  const json& pairs = get_array(j["pairs"], "certificate.pairs");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    c.pair_verdicts.push_back(get_pair(pairs[k], "certificate.pairs[" + std::to_string(k) + "]"));
  }

  const Int count = static_cast<Int>(offsets.size());
  std::size_t k = 0;
  bool all_disjoint = true;
  Int touching = 0;
  for (Int i = 0; i < count; ++i) {
    for (Int jj = i + 1; jj < count; ++jj, ++k) {
      if (k >= c.pair_verdicts.size() || c.pair_verdicts[k].i != i || c.pair_verdicts[k].j != jj) {
        throw InvariantViolation("certificate pairs must list every (i, j) in lexicographic order");
      }
      const PairVerdict& v = c.pair_verdicts[k];
      all_disjoint = all_disjoint && v.interiors_disjoint;
      if (i == 0 && v.segment_length_total > 0) {
        ++touching;
      }
    }
  }
  if (k != c.pair_verdicts.size()) {
    throw InvariantViolation("certificate lists extra pairs");
  }
  if (touching != c.touching_count) {
    throw InvariantViolation("certificate touching_count does not match its contacts");
  }
  if (c.ok != (all_disjoint && c.touching_count == c.n)) {
    throw InvariantViolation("certificate ok flag does not match its verdicts");
  }
  return c;
}

} // namespace

SceneDocument parse(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedDocument(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    malformed("document: expected an object");
  }
  if (!root.contains("schema_version") || !root["schema_version"].is_string()) {
    malformed("document: missing schema_version");
  }
  const auto version = root["schema_version"].get<std::string>();
  if (version != kSchemaVersion) {
    throw SchemaVersionMismatch("schema version \"" + version + "\", expected \"" +
                                std::string(kSchemaVersion) + "\"");
  }
  require_keys(root, "document", {"schema_version", "m", "n", "pieces", "offsets"}, {"certificate"});

  const Int m = get_int(root["m"], "m");
  const Int n = get_int(root["n"], "n");
  const json& pieces_json = get_array(root["pieces"], "pieces");
  std::vector<Piece> pieces;
  pieces.reserve(pieces_json.size());
  for (std::size_t k = 0; k < pieces_json.size(); ++k) {
    pieces.push_back(get_piece(pieces_json[k], "pieces[" + std::to_string(k) + "]"));
  }

  std::optional<Shape> shape;
  try {
    shape.emplace(m, n, std::move(pieces));
  } catch (const ParameterError& e) {
    throw InvariantViolation(e.what());
  }
  if (const auto problems = shape_violations(*shape); !problems.empty()) {
    throw InvariantViolation("shape: " + problems.front());
  }

  const json& offsets_json = get_array(root["offsets"], "offsets");
  std::vector<Vec2> offsets;
  for (std::size_t k = 0; k < offsets_json.size(); ++k) {
    const Point p = get_point(offsets_json[k], "offsets[" + std::to_string(k) + "]");
    offsets.push_back({p.x, p.y});
  }
  if (!offsets.empty()) {
    Scene(std::make_shared<const Shape>(*shape), offsets); // validates placement invariants
  }

  SceneDocument doc{version, std::move(*shape), std::move(offsets), std::nullopt};
  if (root.contains("certificate")) {
    doc.certificate = get_certificate(root["certificate"], doc.shape, doc.offsets);
  }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path + " for reading");
  }
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("error reading " + path);
  }
  return data;
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("error writing " + path);
  }
}

} // namespace tkiss
