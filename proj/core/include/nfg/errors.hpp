#pragma once

#include <stdexcept>
#include <string>

namespace nfg {

/// Base for all domain errors. `kind()` is the stable machine-readable name
/// surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define NFG_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}        \
  }

NFG_DEFINE_ERROR(DisconnectedInput);
NFG_DEFINE_ERROR(UnknownEdge);
NFG_DEFINE_ERROR(UnknownVertex);
NFG_DEFINE_ERROR(EmptyGraph);
NFG_DEFINE_ERROR(InvalidTable);
NFG_DEFINE_ERROR(DistributionMismatch);
NFG_DEFINE_ERROR(NotEssential);
NFG_DEFINE_ERROR(NonPositiveAlpha);
NFG_DEFINE_ERROR(SelfRequest);
NFG_DEFINE_ERROR(SearchTooLarge);
NFG_DEFINE_ERROR(TooSmall);
NFG_DEFINE_ERROR(BadShape);
NFG_DEFINE_ERROR(ConceptMismatch);
NFG_DEFINE_ERROR(ParseError);

#undef NFG_DEFINE_ERROR

}  // namespace nfg
