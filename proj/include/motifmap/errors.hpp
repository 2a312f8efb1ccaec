#ifndef MOTIFMAP_ERRORS_HPP
#define MOTIFMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace motifmap {

// Error categories map onto CLI exit codes: validation -> 2,
// resource refusal -> 3, numeric domain violation -> 4.
enum class ErrorKind { Validation, Resource, Domain };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

#define MOTIFMAP_DEFINE_ERROR(NAME, KIND)                       \
  class NAME : public Error {                                   \
   public:                                                      \
    explicit NAME(const std::string& what = #NAME)              \
        : Error(ErrorKind::KIND, std::string(#NAME ": ") + what) {} \
  }

MOTIFMAP_DEFINE_ERROR(InvalidArgument, Validation);
MOTIFMAP_DEFINE_ERROR(ParseError, Validation);
MOTIFMAP_DEFINE_ERROR(OverlappingSites, Validation);
MOTIFMAP_DEFINE_ERROR(SiteOutOfRange, Validation);
MOTIFMAP_DEFINE_ERROR(UnknownMotifIndex, Validation);
MOTIFMAP_DEFINE_ERROR(EmptyDictionary, Validation);
MOTIFMAP_DEFINE_ERROR(DimensionMismatch, Validation);
MOTIFMAP_DEFINE_ERROR(NonPositivePseudoCount, Validation);
MOTIFMAP_DEFINE_ERROR(PseudoCountSumNotOne, Validation);
MOTIFMAP_DEFINE_ERROR(TooFewPoints, Validation);
MOTIFMAP_DEFINE_ERROR(TooFewIterations, Validation);
MOTIFMAP_DEFINE_ERROR(MultiMotifUnsupported, Validation);
MOTIFMAP_DEFINE_ERROR(ZeroBackgroundProbability, Validation);
MOTIFMAP_DEFINE_ERROR(SupportMismatch, Validation);
MOTIFMAP_DEFINE_ERROR(CountsTooSmall, Validation);
MOTIFMAP_DEFINE_ERROR(InstanceTooLarge, Resource);
MOTIFMAP_DEFINE_ERROR(InfeasiblePlacement, Resource);
MOTIFMAP_DEFINE_ERROR(ZeroLikelihood, Domain);
MOTIFMAP_DEFINE_ERROR(DomainViolation, Domain);

#undef MOTIFMAP_DEFINE_ERROR

}  // namespace motifmap

#endif
