#ifndef XLIE_SERIALIZE_HPP_
#define XLIE_SERIALIZE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "xlie/derivations.hpp"
#include "xlie/isoclinism.hpp"

namespace xlie::io {

using json = nlohmann::ordered_json;

// A malformed document. where() is "line:col" for syntax errors and a JSON
// pointer for schema errors.
class DocumentError : public std::invalid_argument {
 public:
  DocumentError(const std::string& source, const std::string& where, const std::string& message)
      : std::invalid_argument(source + ": " + where + ": " + message), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

json parse_json(std::string_view text, const std::string& source);
std::string fnv1a64(std::string_view bytes);

json to_json(const Scalar& s);
json to_json(const Matrix& m);
json to_json(const Subspace& s);
json to_json(const LieAlgebra& g);
json to_json(const CrossedModule& x);
json to_json(const SubXMod& m);
json to_json(const DerivationSpace& d);
json to_json(const IsoclinismWitness& w);
json to_json(const LieIsoclinismWitness& w);
json to_json(const Fingerprint& f);

// Readers take the JSON pointer of j for error messages. Structures come
// back unvalidated so that callers can report axiom failures themselves.
class Reader {
 public:
  // Documents declaring a Lie algebra above max_dim are rejected before any
  // allocation.
  explicit Reader(std::string source, std::size_t max_dim = 64)
      : source_(std::move(source)), max_dim_(max_dim) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message) const;
  const json& member(const json& j, const std::string& path, const char* key) const;
  std::size_t index(const json& j, const std::string& path) const;
  Field field(const json& j, const std::string& path) const;
  Scalar scalar(const json& j, Field f, const std::string& path) const;
  Vector vector(const json& j, Field f, std::size_t n, const std::string& path) const;
  // Exact shape.
  Matrix matrix(const json& j, Field f, std::size_t rows, std::size_t cols,
                const std::string& path) const;
  // Shape taken from the document; an empty array gives rows = 0 and
  // cols = cols_if_empty.
  Matrix matrix(const json& j, Field f, std::size_t cols_if_empty, const std::string& path) const;
  LieData lie(const json& j, const std::string& path) const;
  XModData xmod(const json& j, const std::string& path) const;
  // Empty matrices take their column counts from the expected shapes.
  IsoclinismWitness witness(const json& j, Field f, const CommutatorPairing& px,
                            const std::string& path) const;

 private:
  std::string source_;
  std::size_t max_dim_;
};

}  // namespace xlie::io

#endif  // XLIE_SERIALIZE_HPP_
