#include "repairkit/service.hpp"

#include <string>

#include <json.hpp>

#include "repairkit/error.hpp"

namespace repairkit {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json error_response(const std::string& message) {
  ordered_json j;
  j["id"] = nullptr;
  j["error"] = message;
  return j;
}

ordered_json handle_line(const std::string& line, const MetricConfig& cfg) {
  ordered_json request =
      ordered_json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (request.is_discarded() || !request.is_object())
    return error_response("request is not a JSON object");
  if (!request.contains("id"))
    return error_response("request is missing 'id'");
  if (!request.contains("candidate") || !request["candidate"].is_string())
    return error_response("request is missing string 'candidate'");
  if (!request.contains("oracle") || !request["oracle"].is_string())
    return error_response("request is missing string 'oracle'");

  try {
    ScoreReport report = score_pair(request["candidate"].get<std::string>(),
                                    request["oracle"].get<std::string>(), cfg);
    ordered_json response;
    response["id"] = request["id"];
    response["bleu"] = report.bleu;
    response["weighted_bleu"] = report.weighted_bleu;
    response["sim_ast"] = report.sim_ast;
    response["sim_dfg"] = report.sim_dfg;
    response["reward"] = report.reward;
    response["codebleu"] = report.codebleu;
    ordered_json flags = ordered_json::array();
    for (Degraded flag : report.degraded) flags.push_back(degraded_name(flag));
    response["degraded"] = std::move(flags);
    return response;
  } catch (const Error& e) {
    return error_response(e.what());
  }
}

}  // namespace

size_t run_reward_service(std::istream& in, std::ostream& out,
                          const MetricConfig& cfg) {
  std::string line;
  size_t handled = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out << handle_line(line, cfg).dump() << '\n';
    out.flush();
    ++handled;
  }
  return handled;
}

}  // namespace repairkit
