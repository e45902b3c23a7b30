#ifndef WEYL_ERRORS_HPP_
#define WEYL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace weyl {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidType : Error {
  explicit InvalidType(const std::string& w) : Error(w) {}
};
struct InvalidNode : Error {
  explicit InvalidNode(const std::string& w) : Error(w) {}
};
struct NotAffine : Error {
  explicit NotAffine(const std::string& w) : Error(w) {}
};
struct ContextMismatch : Error {
  explicit ContextMismatch(const std::string& w) : Error(w) {}
};
struct NotARoot : Error {
  explicit NotARoot(const std::string& w) : Error(w) {}
};
struct ZeroLevel : Error {
  explicit ZeroLevel(const std::string& w) : Error(w) {}
};
struct LevelBoundExceeded : Error {
  explicit LevelBoundExceeded(const std::string& w) : Error(w) {}
};
struct OrbitBoundExceeded : Error {
  explicit OrbitBoundExceeded(const std::string& w) : Error(w) {}
};
struct NoShortRoots : Error {
  explicit NoShortRoots(const std::string& w) : Error(w) {}
};
struct NotATranslation : Error {
  explicit NotATranslation(const std::string& w) : Error(w) {}
};
struct NotInSameXk : Error {
  explicit NotInSameXk(const std::string& w) : Error(w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(w) {}
};

}  // namespace weyl

#endif
