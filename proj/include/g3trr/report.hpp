#ifndef G3TRR_REPORT_HPP
#define G3TRR_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "g3trr/ansatz.hpp"
#include "g3trr/rspin.hpp"
#include "g3trr/tautograph.hpp"

namespace g3trr {

using json = nlohmann::ordered_json;

// {degree, constant, unknowns: {a_i: "p/q"}} per occupied degree
json evalform_json(const EvalForm& ef);
std::string evalform_dump(const EvalForm& ef);

json relation_json(const Relation& rel);
json system_json(const LinearSystem& sys,
                 const std::array<Rational, kUnknownCount>& solved);
json verify_json(const VerifyReport& report);
json rspin_json(const SpinSpec& spec, int genus, int points);
json graphs_json(const std::vector<GraphRelationEntry>& relation,
                 const TranslationReport& report);

std::string relation_text(const Relation& rel);
std::string system_text(const std::array<Rational, kUnknownCount>& solved);
std::string verify_text(const std::string& label, const VerifyReport& report);
std::string rspin_text(const SpinSpec& spec, int genus, int points);
std::string graphs_text(const std::vector<GraphRelationEntry>& relation,
                        const TranslationReport& report);

}  // namespace g3trr

#endif
