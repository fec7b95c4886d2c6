#pragma once

#include <stdexcept>
#include <string>

namespace coboson {

/// Input outside an operation's domain (x = 1 where no limit exists, beta <= 0, ...).
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series or iteration hit its hard cap before meeting its stopping criterion.
class non_convergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root solver could not bracket, or the bracketed function was not monotone.
class bracket_failure : public non_convergence {
 public:
  using non_convergence::non_convergence;
};

/// Symmetric-polynomial oracle denominator underflowed to zero.
class degenerate_denominator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw domain_error(what);
}
}  // namespace detail

}  // namespace coboson
