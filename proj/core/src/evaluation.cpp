#include "traysight/evaluation.hpp"

#include <unordered_map>

#include "text.hpp"
#include "traysight/error.hpp"

namespace traysight {

ConfusionMatrix tally(const std::vector<bool>& predicted, const std::vector<bool>& actual) {
    if (predicted.size() != actual.size()) {
        throw Error(ErrorCode::LengthMismatch, std::to_string(predicted.size()) + " predictions vs " +
                                                   std::to_string(actual.size()) + " labels");
    }
    if (predicted.empty()) throw Error(ErrorCode::EmptyInput, "nothing to tally");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const bool p = predicted[i];
        const bool a = actual[i];
        if (a && p) {
            ++cm.tp;
        } else if (a) {
            ++cm.fn;
        } else if (p) {
            ++cm.fp;
        } else {
            ++cm.tn;
        }
    }
    return cm;
}

Metrics metrics(const ConfusionMatrix& cm) {
    const auto total = cm.total();
    if (total == 0) throw Error(ErrorCode::EmptyInput, "confusion matrix is empty");
    Metrics m;
    m.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(total);
    if (cm.tp + cm.fp > 0) m.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
    if (cm.tp + cm.fn > 0) m.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
    return m;
}

std::string format_metric(std::optional<double> value) {
    return value ? detail::format_fixed(*value, 4) : std::string("undefined");
}

std::vector<LabelRecord> parse_labels(std::string_view text) {
    std::vector<LabelRecord> out;
    std::unordered_map<std::string, std::size_t> seen;
    std::size_t lineno = 0;
    for (auto line : detail::split_lines(text)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        const auto t = detail::split_ws(line);
        if (t.size() != 2 || (t[1] != "0" && t[1] != "1")) {
            throw Error(ErrorCode::MalformedLine,
                        "line " + std::to_string(lineno) + ": expected '<id> <0|1>'");
        }
        std::string id(t[0]);
        if (!seen.emplace(id, lineno).second) {
            throw Error(ErrorCode::DuplicateKey, "id '" + id + "' repeated at line " + std::to_string(lineno));
        }
        out.push_back({std::move(id), t[1] == "1"});
    }
    return out;
}

std::string format_labels(const std::vector<LabelRecord>& records) {
    std::string out;
    for (const auto& r : records) out += r.id + (r.label ? " 1\n" : " 0\n");
    return out;
}

std::pair<std::vector<bool>, std::vector<bool>> join_labels(const std::vector<LabelRecord>& predicted,
                                                            const std::vector<LabelRecord>& truth) {
    std::unordered_map<std::string_view, bool> pred;
    pred.reserve(predicted.size());
    for (const auto& r : predicted) pred.emplace(r.id, r.label);

    std::pair<std::vector<bool>, std::vector<bool>> out;
    out.first.reserve(truth.size());
    out.second.reserve(truth.size());
    for (const auto& r : truth) {
        auto it = pred.find(r.id);
        if (it == pred.end()) throw Error(ErrorCode::UnmatchedId, "no prediction for id '" + r.id + "'");
        out.first.push_back(it->second);
        out.second.push_back(r.label);
    }
    if (predicted.size() != truth.size()) {
        std::unordered_map<std::string_view, bool> truth_ids;
        for (const auto& r : truth) truth_ids.emplace(r.id, true);
        for (const auto& r : predicted) {
            if (!truth_ids.count(r.id)) throw Error(ErrorCode::UnmatchedId, "no ground truth for id '" + r.id + "'");
        }
    }
    return out;
}

}  // namespace traysight
