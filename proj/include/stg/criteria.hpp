#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stg/graph.hpp"
#include "stg/semilinear.hpp"

namespace stg {

struct SinkWitness {
  std::string vertex;
};
struct InfiniteEmitterWitness {
  std::string vertex;
};
struct IsolatedWitness {
  std::string vertex;
};
struct SingularReceivesWitness {
  std::string vertex;
  long long length;  // the missing incoming path length
};
struct ConditionYWitness {
  std::string ray;
  long long k;
  Path prefix;  // blocking core path into a ray entry
  std::string explanation;
};
// k-graph: vertex emits no edge of the named color
struct SourceWitness {
  std::string vertex;
  int color = 0;
};
// k-graph: reachable all-bad lasso in the phase product graph
struct LassoWitness {
  std::vector<long long> m;          // folded degree-offset representative
  std::vector<std::string> stem;     // states leading to the cycle
  std::vector<std::string> cycle;    // the repeating states
};

using Witness = std::variant<SinkWitness, InfiniteEmitterWitness, IsolatedWitness,
                             SingularReceivesWitness, ConditionYWitness,
                             SourceWitness, LassoWitness>;

struct Verdict {
  bool yes = false;
  std::optional<Witness> witness;
  std::vector<std::pair<std::string, bool>> criteria_trace;
  std::string describe_witness() const;
};

Verdict yes_verdict();
Verdict no_verdict(Witness w);

// Condition on incoming path lengths along every infinite path; always
// satisfied when there are no rays (every core-confined infinite path is
// based at a cycle, whose vertices receive paths of every length).
Verdict condition_y(const Graph& g);

// Strong Z-grading of the path algebra: row-finite, no sinks, condition_y.
Verdict strongly_z_graded(const Graph& g);

// Strong Z/n-grading: every singular vertex receives a path of length n-1.
Verdict strongly_zmod_graded(const Graph& g, long long n);

}  // namespace stg
