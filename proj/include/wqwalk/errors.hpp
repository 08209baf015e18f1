// errors.hpp — exception types shared across the walk library
#pragma once

#include <stdexcept>

namespace wqwalk {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonPositiveWeight : public Error { public: using Error::Error; };
class DuplicateEdge : public Error { public: using Error::Error; };
class VertexOutOfRange : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class MovingShiftUnsupported : public Error { public: using Error::Error; };
class IsolatedVertex : public Error { public: using Error::Error; };
class BoundaryContamination : public Error { public: using Error::Error; };
class NonIntegerMultiplicity : public Error { public: using Error::Error; };
class NonUniformGroup : public Error { public: using Error::Error; };
class NegativeLoopWeight : public Error { public: using Error::Error; };
class RhoOutOfRange : public Error { public: using Error::Error; };
class NoPeakFound : public Error { public: using Error::Error; };
class AmbiguousRegime : public Error { public: using Error::Error; };

}  // namespace wqwalk
