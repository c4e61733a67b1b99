#ifndef LOCDOM_ERRORS_HPP
#define LOCDOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace locdom {

enum class Err {
  kParse,
  kInvalidEdge,
  kDisconnected,
  kIsolatedVertex,
  kCapExceeded,
  kTimeout,
  kNotTwinFree,
  kNotMaximum,
  kNotDistinguishing,
  kNotLocatingDominating,
  kNotMinimalDominating,
  kStarIsK2,
  kHasC4,
  kNotATree,
  kBadParams,
  kUnknownStatement,
  kMixedOrders,
};

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

// Process exit code category used by the CLI: 2 = malformed input,
// 3 = violated precondition, 4 = cap or time budget exceeded.
inline int exit_code_for(Err kind) {
  switch (kind) {
    case Err::kParse:
      return 2;
    case Err::kCapExceeded:
    case Err::kTimeout:
      return 4;
    default:
      return 3;
  }
}

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace locdom

#endif
