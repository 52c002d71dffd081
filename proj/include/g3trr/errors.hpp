#ifndef G3TRR_ERRORS_HPP
#define G3TRR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace g3trr {

struct DivisionByZero : std::invalid_argument {
  DivisionByZero() : std::invalid_argument("rational division by zero") {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentSystem : std::runtime_error {
  explicit InconsistentSystem(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidKey : std::invalid_argument {
  explicit InvalidKey(const std::string& what) : std::invalid_argument(what) {}
};

// Query escaped the seed closure; carries the irreducible remainder key.
struct IrreducibleCorrelator : std::runtime_error {
  std::string key_description;
  explicit IrreducibleCorrelator(const std::string& key)
      : std::runtime_error("correlator outside seed closure: " + key),
        key_description(key) {}
};

struct ConflictingSeed : std::runtime_error {
  explicit ConflictingSeed(const std::string& what) : std::runtime_error(what) {}
};

struct UnboundIndex : std::logic_error {
  explicit UnboundIndex(const std::string& what) : std::logic_error(what) {}
};

struct UnstableGraph : std::invalid_argument {
  explicit UnstableGraph(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace g3trr

#endif
