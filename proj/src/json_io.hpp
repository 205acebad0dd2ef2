#ifndef CKA_JSON_IO_HPP
#define CKA_JSON_IO_HPP

#include "semilinear.hpp"
#include "trace.hpp"

#include <json.hpp>

namespace cka {

/**
 * Vector encoding: an object of letter -> count with zero counts omitted,
 * e.g. {"a": 2, "b": 1}. The zero vector is {}.
 */
nlohmann::json vector_to_json(const Alphabet &alphabet, const ParikhVector &v);
ParikhVector vector_from_json(const Alphabet &alphabet,
                              const nlohmann::json &j);

/**
 * Set encoding: {"alphabet": ["a","b"], "terms": [{"offset": {...},
 * "base": [{...}]}]}, terms and bases in canonical order.
 */
nlohmann::json semilinear_to_json(const Alphabet &alphabet,
                                  const SemilinearSet &s);
SemilinearSet semilinear_from_json(const Alphabet &alphabet,
                                   const nlohmann::json &j);

/** {"steps": [{"rule": ..., "before": ..., "after": ..., "note": ...}]} */
nlohmann::json trace_to_json(const Alphabet &alphabet, const Trace &trace);

} // namespace cka

#endif
