#pragma once

#include "cascade/design.hpp"

namespace cascade {

/// Removes the leader (first item) of test l from every other test, leaving
/// test l untouched. l is a 0-based test index; test l must be nonempty.
/// Feasibility of feasible designs is preserved.
Design strip_leader(const Design& d, int l);

/// Reduces a design to systematic form without increasing its size:
/// drops empty tests, then walks the tests once, stripping each nonempty
/// test's leader from all other tests (tests emptied along the way are
/// skipped and discarded at the end). The result of a feasible input is
/// feasible; the operation is idempotent.
Design to_systematic(const Design& d);

}  // namespace cascade
