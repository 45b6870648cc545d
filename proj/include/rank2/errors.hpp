#pragma once

#include <stdexcept>
#include <string>

namespace rank2 {

// Base class for every failure raised by the library. Callers that only care
// about "something went wrong" catch this; the CLI maps subclasses onto exit
// codes.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class not_divisible : public error {
 public:
  not_divisible() : error("exact division failed: divisor does not divide dividend") {}
};

class empty_polynomial : public error {
 public:
  empty_polynomial() : error("operation undefined on the zero polynomial") {}
};

class point_not_on_path : public error {
 public:
  point_not_on_path(int x, int y)
      : error("point (" + std::to_string(x) + "," + std::to_string(y) + ") is not on the path") {}
};

class out_of_range : public error {
 public:
  using error::error;
};

// Enumeration refused because the path is longer than the configured cap.
class too_large : public error {
 public:
  too_large(int edges, int cap)
      : error("path has " + std::to_string(edges) + " edges, cap is " + std::to_string(cap)),
        edges_(edges),
        cap_(cap) {}
  int edges() const noexcept { return edges_; }
  int cap() const noexcept { return cap_; }

 private:
  int edges_;
  int cap_;
};

class precedence_violated : public error {
 public:
  using error::error;
};

class negative_index : public error {
 public:
  negative_index(int a1, int a2)
      : error("greedy index (" + std::to_string(a1) + "," + std::to_string(a2) +
              ") has a negative coordinate") {}
};

class not_imaginary_root : public error {
 public:
  using error::error;
};

class not_wild : public error {
 public:
  not_wild(int b, int c)
      : error("A(" + std::to_string(b) + "," + std::to_string(c) + ") is not wild (bc <= 4)") {}
};

class identity_violated : public error {
 public:
  identity_violated(long k, const std::string& which)
      : error("identity " + which + " fails at k=" + std::to_string(k)), k_(k), which_(which) {}
  long k() const noexcept { return k_; }
  const std::string& which() const noexcept { return which_; }

 private:
  long k_;
  std::string which_;
};

class not_laurent : public error {
 public:
  not_laurent() : error("substitution result is not a Laurent polynomial") {}
};

class range_violated : public error {
 public:
  using error::error;
};

}  // namespace rank2
