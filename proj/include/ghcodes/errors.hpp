#pragma once

#include <stdexcept>

namespace ghcodes {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonPrimeCharacteristic : public Error { public: using Error::Error; };
class FieldTooLarge : public Error { public: using Error::Error; };
class DivisionByZero : public Error { public: using Error::Error; };
class PoleAtPlace : public Error { public: using Error::Error; };
class MixedValuationCancellation : public Error { public: using Error::Error; };
class OddQForCr : public Error { public: using Error::Error; };
class ROutOfRange : public Error { public: using Error::Error; };
class WindowTooSmall : public Error { public: using Error::Error; };
class ZeroScaleEntry : public Error { public: using Error::Error; };
class ParamsOutOfRange : public Error { public: using Error::Error; };
class WeightMismatch : public Error { public: using Error::Error; };
class NotFound : public Error { public: using Error::Error; };
class InternalInconsistency : public Error { public: using Error::Error; };

}  // namespace ghcodes
