#pragma once

// Workspace files ("commacat-workspace/1"): named instances, functors,
// contexts, objects, morphisms, stability functions and toy geometries.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>

#include "commacat/cocomma.hpp"
#include "commacat/comma.hpp"
#include "commacat/stability.hpp"
#include "commacat/wall_scan.hpp"
#include "json.hpp"

namespace commacat::cli {

/// Malformed or inconsistent workspace (exit code 3).
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Context = std::variant<CommaCategory, CoCommaCategory>;
using AnyObject = std::variant<CommaObject, CoCommaObject>;
using AnyMorphism = std::variant<CommaMorphism, CoCommaMorphism>;

template <class T>
struct Named {
  std::string context;
  T value;
};

struct NamedRep {
  std::string category;
  RepObject value;
};

struct Validation {
  std::size_t samples = 50;
  std::size_t functor_samples = 100;
  std::size_t max_total_dim = 3;
};

struct Workspace {
  std::uint32_t p = 2;
  std::uint64_t seed = 0;
  Budget budget;
  Validation validation;
  std::map<std::string, RepCategory> categories;
  std::map<std::string, NamedRep> rep_objects;
  std::map<std::string, Functor> functors;
  std::map<std::string, Context> contexts;
  std::map<std::string, Named<AnyObject>> objects;
  std::map<std::string, Named<AnyMorphism>> morphisms;
  std::map<std::string, Named<StabilityFunction>> stability;
  std::map<std::string, Named<ToyGeometry>> geometries;

  const Context& context(const std::string& name) const;
  const Named<AnyObject>& object(const std::string& name) const;
  const Named<AnyMorphism>& morphism(const std::string& name) const;
};

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> max_vectors;
  std::optional<std::size_t> max_total_dim;
};

/// Parses and validates; every failure is a SpecError naming the entry.
Workspace load_workspace(const nlohmann::json& j, const Overrides& overrides);

}  // namespace commacat::cli
