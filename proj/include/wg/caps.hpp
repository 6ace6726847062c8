#pragma once

#include <string>

#include "wg/error.hpp"

namespace wg {

/// Enumeration limits; every brute-force routine checks one of these before it starts.
struct Caps {
  long long group_order = 10'000;
  long long elements = 1'000'000;
  long long class_work = 10'000'000;

  void check(const std::string& name, long long limit, long long requested) const {
    if (requested > limit) throw CapExceeded(name, limit, requested);
  }
  void check_elements(long long requested) const { check("elements", elements, requested); }
  void check_class_work(long long requested) const { check("classwork", class_work, requested); }
};

}  // namespace wg
