#ifndef CKA_TRACE_HPP
#define CKA_TRACE_HPP

#include "semilinear.hpp"

#include <string>
#include <variant>
#include <vector>

namespace cka {

/**
 * One recorded rewrite: a named rule with before/after snapshots of the same
 * kind (expression or semilinear set). Steps are audit artifacts; the
 * semantic equality of the two sides is checked by tests, not here.
 */
struct TraceStep {
  std::string rule;
  std::variant<ExprPtr, SemilinearSet> before;
  std::variant<ExprPtr, SemilinearSet> after;
  std::string note;
};

class Trace {
public:
  void record_expr(std::string rule, ExprPtr before, ExprPtr after,
                   std::string note = "") {
    steps_.push_back({std::move(rule), std::move(before), std::move(after),
                      std::move(note)});
  }

  void record_set(std::string rule, SemilinearSet before, SemilinearSet after,
                  std::string note = "") {
    steps_.push_back({std::move(rule), std::move(before), std::move(after),
                      std::move(note)});
  }

  void append(Trace other) {
    for (TraceStep &s : other.steps_)
      steps_.push_back(std::move(s));
  }

  const std::vector<TraceStep> &steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }

private:
  std::vector<TraceStep> steps_;
};

} // namespace cka

#endif
