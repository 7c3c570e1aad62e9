#include "tabstat/trace.hpp"

#include <algorithm>

#include <json.hpp>

#include "tabstat/operators.hpp"

namespace tabstat {

namespace {

// Applies one structural or operator step to `state`.
Filling apply_step(const Filling& state, const TraceStep& step) {
    if (step.op == "reverse") return split_reverse_join(state);
    if (step.op == "phi") return phi(state, step.column);
    if (step.op == "t") return row_swap(state, step.column, step.row_from);
    if (step.op == "t-range") return range_swap(state, step.column, step.row_from, step.row_to);
    if (step.op == "rho") {
        FlipResult fr = rho(state, step.column, step.row_to == 0 ? state.shape().col_height(step.column)
                                                                 : step.row_to);
        return fr.filling;
    }
    if (step.op == "init") {
        // Restart from the reversed bottom row of the current state.
        detail::require(!state.empty(), "init: empty filling");
        std::vector<ExtValue> row = state.rows().front();
        std::reverse(row.begin(), row.end());
        int len = static_cast<int>(row.size());
        return Filling::padded(Partition({len}), {std::move(row)});
    }
    if (step.op == "stack") {
        auto rows = state.rows();
        rows.push_back(step.cells);
        auto parts = state.shape().parts();
        parts.push_back(static_cast<int>(step.cells.size()));
        return Filling::padded(Partition(std::move(parts)), std::move(rows));
    }
    if (step.op == "strip") {
        auto rows = state.rows();
        detail::require(!rows.empty(), "strip: empty filling");
        auto& top = rows.back();
        while (!top.empty() && top.back().is_zero()) top.pop_back();
        detail::require(!top.empty(), "strip: top row entirely zero");
        auto parts = state.shape().parts();
        parts.back() = static_cast<int>(top.size());
        return Filling::padded(Partition(std::move(parts)), std::move(rows));
    }
    throw DomainError("trace: unknown op '" + step.op + "'");
}

}  // namespace

bool replay(const Trace& trace) {
    Filling state = trace.input;
    for (const TraceStep& step : trace.steps) {
        state = apply_step(state, step);
        if (!(state == step.after)) return false;
    }
    return state == trace.output;
}

std::string trace_to_json_text(const Trace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    std::string prev = filling_to_json_text(trace.input);
    for (const TraceStep& step : trace.steps) {
        nlohmann::json js;
        js["op"] = step.op;
        if (step.column) js["column"] = step.column;
        if (step.row_from || step.row_to) js["rows"] = {step.row_from, step.row_to};
        if (!step.cells.empty()) {
            nlohmann::json cells = nlohmann::json::array();
            for (ExtValue v : step.cells) cells.push_back(v.is_zero() ? 0 : v.finite());
            js["cells"] = std::move(cells);
        }
        js["before"] = nlohmann::json::parse(prev);
        prev = filling_to_json_text(step.after);
        js["after"] = nlohmann::json::parse(prev);
        steps.push_back(std::move(js));
    }
    nlohmann::json doc;
    doc["input"] = nlohmann::json::parse(filling_to_json_text(trace.input));
    doc["steps"] = std::move(steps);
    doc["output"] = nlohmann::json::parse(filling_to_json_text(trace.output));
    return doc.dump();
}

std::string trace_to_text(const Trace& trace) {
    std::string out;
    out += "input:\n" + serialize_filling(trace.input);
    int n = 0;
    for (const TraceStep& step : trace.steps) {
        out += "step " + std::to_string(++n) + ": " + step.op;
        if (step.column) out += " col=" + std::to_string(step.column);
        if (step.op == "rho")
            out += " start_row=" + std::to_string(step.row_to) + " end_row=" + std::to_string(step.row_from);
        else if (step.op == "t")
            out += " row=" + std::to_string(step.row_from);
        else if (step.op == "t-range")
            out += " rows=" + std::to_string(step.row_from) + ".." + std::to_string(step.row_to);
        out += "\n" + serialize_filling(step.after);
    }
    out += "output:\n" + serialize_filling(trace.output);
    return out;
}

}  // namespace tabstat
