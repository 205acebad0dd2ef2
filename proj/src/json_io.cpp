#include "json_io.hpp"

namespace cka {

namespace {

nlohmann::json::number_unsigned_t to_json_count(const Int &n) {
  if (!n.fits_ulong_p())
    throw UsageError("count too large for the JSON encoding");
  return n.get_ui();
}

Int from_json_count(const nlohmann::json &j) {
  if (j.is_number_unsigned())
    return Int(static_cast<unsigned long>(
        j.get<nlohmann::json::number_unsigned_t>()));
  if (j.is_number_integer() && j.get<nlohmann::json::number_integer_t>() >= 0)
    return Int(
        static_cast<long>(j.get<nlohmann::json::number_integer_t>()));
  throw UsageError("counts must be non-negative integers");
}

} // namespace

nlohmann::json vector_to_json(const Alphabet &alphabet,
                              const ParikhVector &v) {
  CKA_CHECK(alphabet.size() == v.width(), "alphabet/vector width mismatch");
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < v.width(); ++i)
    if (sgn(v.count(i)) != 0)
      out[std::string(1, alphabet.letter(i))] = to_json_count(v.count(i));
  return out;
}

ParikhVector vector_from_json(const Alphabet &alphabet,
                              const nlohmann::json &j) {
  if (!j.is_object())
    throw UsageError("vector encoding must be an object");
  ParikhVector v(alphabet.size());
  for (const auto &[key, value] : j.items()) {
    if (key.size() != 1)
      throw UsageError("vector keys must be single letters, got '" + key + "'");
    auto idx = alphabet.index_of(key.front());
    if (!idx)
      throw UsageError("unknown letter '" + key + "' in vector encoding");
    v.set_count(*idx, from_json_count(value));
  }
  return v;
}

nlohmann::json semilinear_to_json(const Alphabet &alphabet,
                                  const SemilinearSet &s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const LinearSet &t : s.terms()) {
    nlohmann::json base = nlohmann::json::array();
    for (const ParikhVector &b : t.base())
      base.push_back(vector_to_json(alphabet, b));
    terms.push_back({{"offset", vector_to_json(alphabet, t.offset())},
                     {"base", std::move(base)}});
  }
  nlohmann::json letters = nlohmann::json::array();
  for (char c : alphabet.letters())
    letters.push_back(std::string(1, c));
  return {{"alphabet", std::move(letters)}, {"terms", std::move(terms)}};
}

SemilinearSet semilinear_from_json(const Alphabet &alphabet,
                                   const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw UsageError("semilinear encoding must have a \"terms\" array");
  if (j.contains("alphabet")) {
    const nlohmann::json &letters = j["alphabet"];
    if (!letters.is_array() || letters.size() != alphabet.size())
      throw UsageError("encoded alphabet does not match the session alphabet");
    for (std::size_t i = 0; i < alphabet.size(); ++i)
      if (!letters[i].is_string() ||
          letters[i].get<std::string>() != std::string(1, alphabet.letter(i)))
        throw UsageError("encoded alphabet does not match the session alphabet");
  }
  std::vector<LinearSet> terms;
  for (const nlohmann::json &term : j["terms"]) {
    if (!term.is_object() || !term.contains("offset"))
      throw UsageError("each term needs an \"offset\"");
    ParikhVector offset = vector_from_json(alphabet, term["offset"]);
    std::vector<ParikhVector> base;
    if (term.contains("base")) {
      if (!term["base"].is_array())
        throw UsageError("\"base\" must be an array");
      for (const nlohmann::json &b : term["base"])
        base.push_back(vector_from_json(alphabet, b));
    }
    terms.emplace_back(std::move(offset), std::move(base));
  }
  return SemilinearSet(std::move(terms));
}

nlohmann::json trace_to_json(const Alphabet &alphabet, const Trace &trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const TraceStep &step : trace.steps()) {
    auto snapshot = [&](const std::variant<ExprPtr, SemilinearSet> &side) {
      if (const ExprPtr *e = std::get_if<ExprPtr>(&side))
        return nlohmann::json(print_expr(alphabet, **e));
      return semilinear_to_json(alphabet, std::get<SemilinearSet>(side));
    };
    steps.push_back({{"rule", step.rule},
                     {"before", snapshot(step.before)},
                     {"after", snapshot(step.after)},
                     {"note", step.note}});
  }
  return {{"steps", std::move(steps)}};
}

} // namespace cka
