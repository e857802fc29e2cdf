#include "monodromy/serialize.hpp"

#include <stdexcept>

namespace monodromy {

namespace {

Int int_from_json(const OrderedJson& j, const char* what) {
    try {
        if (j.is_string()) return Int(j.get<std::string>());
        if (j.is_number_integer()) return Int(j.get<long long>());
        if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": not a decimal integer");
    }
    throw std::invalid_argument(std::string(what) + ": expected integer or decimal string");
}

}  // namespace

OrderedJson matrix_to_json(const ExactMatrix& a) {
    OrderedJson rows = OrderedJson::array();
    for (int i = 0; i < a.dim(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (int j = 0; j < a.dim(); ++j) row.push_back(a.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const OrderedJson& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("matrix: expected a non-empty array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j) {
        if (!row.is_array())
            throw std::invalid_argument("matrix: each row must be an array");
        std::vector<Int> out;
        for (const auto& cell : row) out.push_back(int_from_json(cell, "matrix entry"));
        rows.push_back(std::move(out));
    }
    for (const auto& row : rows)
        if (row.size() != rows.size())
            throw std::invalid_argument("matrix: must be square");
    return ExactMatrix::from_rows(rows);
}

OrderedJson rep_to_json(const InertiaRep& rep) {
    OrderedJson j;
    j["dim"] = rep.dim;
    if (rep.mode == CoefficientMode::Integer)
        j["mode"] = OrderedJson{{"integer", OrderedJson{{"ell", rep.ell.str()}}}};
    else
        j["mode"] = OrderedJson{{"residue", OrderedJson{{"n", rep.modulus.str()}}}};
    j["tame"] = matrix_to_json(rep.tame);
    OrderedJson wild = OrderedJson::array();
    for (const auto& w : rep.wild) wild.push_back(matrix_to_json(w));
    j["wild"] = std::move(wild);
    j["form"] = rep.form ? matrix_to_json(*rep.form) : OrderedJson(nullptr);
    j["label"] = rep.label;
    return j;
}

InertiaRep rep_from_json(const OrderedJson& j) {
    if (!j.is_object()) throw std::invalid_argument("rep: expected a JSON object");
    for (const char* key : {"dim", "mode", "tame", "wild", "form", "label"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("rep: missing field '") + key + "'");
    InertiaRep rep;
    if (!j["dim"].is_number_integer() && !j["dim"].is_number_unsigned())
        throw std::invalid_argument("rep: 'dim' must be an integer");
    rep.dim = j["dim"].get<int>();
    const auto& mode = j["mode"];
    if (mode.is_object() && mode.contains("integer")) {
        rep.mode = CoefficientMode::Integer;
        rep.ell = int_from_json(mode["integer"].at("ell"), "rep mode.integer.ell");
    } else if (mode.is_object() && mode.contains("residue")) {
        rep.mode = CoefficientMode::Residue;
        rep.modulus = int_from_json(mode["residue"].at("n"), "rep mode.residue.n");
    } else {
        throw std::invalid_argument("rep: 'mode' must be {\"integer\":{...}} or {\"residue\":{...}}");
    }
    rep.tame = matrix_from_json(j["tame"]);
    if (!j["wild"].is_array()) throw std::invalid_argument("rep: 'wild' must be an array");
    for (const auto& w : j["wild"]) rep.wild.push_back(matrix_from_json(w));
    if (!j["form"].is_null()) rep.form = matrix_from_json(j["form"]);
    if (!j["label"].is_string()) throw std::invalid_argument("rep: 'label' must be a string");
    rep.label = j["label"].get<std::string>();
    rep.validate();
    return rep;
}

OrderedJson classification_to_json(const Classification& c) {
    OrderedJson j;
    j["verdict"] = verdict_name(c.verdict);
    j["reason"] = c.reason;
    j["theorem"] = c.theorem;
    OrderedJson ev = OrderedJson::array();
    for (const auto& e : c.evidence)
        ev.push_back(OrderedJson{{"word", e.word}, {"test", e.test}, {"pass", e.pass}});
    j["evidence"] = std::move(ev);
    return j;
}

OrderedJson suite_report_to_json(const SuiteReport& r) {
    OrderedJson j;
    j["suite"] = r.suite;
    j["cases"] = r.cases;
    j["passes"] = r.passes;
    OrderedJson fails = OrderedJson::array();
    for (const auto& f : r.failures)
        fails.push_back(OrderedJson{{"case", f.case_id}, {"detail", f.detail}, {"input", f.input}});
    j["failures"] = std::move(fails);
    j["notes"] = r.notes;
    j["seed"] = r.seed;
    return j;
}

std::string canonical_dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

}  // namespace monodromy
