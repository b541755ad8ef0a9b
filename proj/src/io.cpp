/*
 * Copyright 2026 The optchoice Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "optchoice/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "optchoice/error.hpp"

namespace optchoice {

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string::size_type begin = 0;
    while (true) {
        const auto pos = line.find(sep, begin);
        out.push_back(line.substr(begin, pos - begin));
        if (pos == std::string::npos) break;
        begin = pos + 1;
    }
    return out;
}

std::string line_error(std::size_t line, const std::string& what) {
    return "line " + std::to_string(line) + ": " + what;
}

bool parse_double(const std::string& text, double& value) {
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, value);
    return res.ec == std::errc() && res.ptr == last && std::isfinite(value);
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_blank(const std::string& line) { return line.find_first_not_of(" \t") == std::string::npos; }

struct PendingLot {
    std::string id;
    std::size_t first_line = 0;
    std::vector<double> values;
    std::optional<std::size_t> prime;
    std::size_t rows = 0;
};

}  // namespace

Dataset read_dataset(std::istream& in, bool strict_range) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (is_blank(line)) continue;
        header = split(line, ',');
        break;
    }
    if (header.empty()) fail(ErrorKind::Data, "dataset file is empty");
    if (header.size() < 3 || header[0] != "lot_id" || header[1] != "is_prime")
        fail(ErrorKind::Data, line_error(line_no, "header must be lot_id,is_prime,<features...>"));
    std::vector<std::string> names(header.begin() + 2, header.end());
    std::set<std::string> unique;
    for (const auto& name : names) {
        if (name.empty()) fail(ErrorKind::Data, line_error(line_no, "empty feature name in header"));
        if (!unique.insert(name).second)
            fail(ErrorKind::Data, line_error(line_no, "duplicate feature name '" + name + "'"));
    }
    const std::size_t d = names.size();

    std::vector<Lot> lots;
    std::set<std::string> finished;
    PendingLot pending;
    auto close_lot = [&]() {
        if (pending.rows == 0) return;
        if (pending.rows < 2)
            fail(ErrorKind::Data, line_error(pending.first_line, "lot '" + pending.id + "' has a single choice"));
        try {
            lots.emplace_back(pending.id, d, std::move(pending.values), pending.prime);
        } catch (const Error& e) {
            fail(ErrorKind::Data, line_error(pending.first_line, e.what()));
        }
        finished.insert(pending.id);
        pending = PendingLot{};
    };

    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (is_blank(line)) continue;
        const auto cells = split(line, ',');
        if (cells.size() != header.size())
            fail(ErrorKind::Data, line_error(line_no, "expected " + std::to_string(header.size()) + " columns, got " +
                                                          std::to_string(cells.size())));
        const std::string& id = cells[0];
        if (id.empty()) fail(ErrorKind::Data, line_error(line_no, "empty lot_id"));
        if (id != pending.id) {
            close_lot();
            if (finished.count(id))
                fail(ErrorKind::Data, line_error(line_no, "rows of lot '" + id + "' are not contiguous"));
            pending.id = id;
            pending.first_line = line_no;
        }
        if (cells[1] == "1") {
            if (pending.prime)
                fail(ErrorKind::Data, line_error(line_no, "lot '" + id + "' has more than one prime"));
            pending.prime = pending.rows;
        } else if (cells[1] != "0") {
            fail(ErrorKind::Data, line_error(line_no, "is_prime must be 0 or 1"));
        }
        for (std::size_t j = 0; j < d; ++j) {
            double v = 0.0;
            if (!parse_double(cells[j + 2], v))
                fail(ErrorKind::Data, line_error(line_no, "feature '" + names[j] + "' is not a finite number: '" +
                                                              cells[j + 2] + "'"));
            if (strict_range && (v < 0.0 || v > 1.0))
                fail(ErrorKind::Data, line_error(line_no, "feature '" + names[j] + "' outside [0, 1]"));
            pending.values.push_back(v);
        }
        ++pending.rows;
    }
    close_lot();
    if (in.bad()) fail(ErrorKind::Io, "read failure");
    return Dataset(std::move(names), std::move(lots), strict_range);
}

void write_dataset(std::ostream& out, const Dataset& dataset) {
    auto check_cell = [](const std::string& text) {
        if (text.empty() || text.find_first_of(",\r\n") != std::string::npos)
            fail(ErrorKind::Schema, "'" + text + "' cannot be written as a CSV cell");
    };
    for (const auto& name : dataset.feature_names()) check_cell(name);
    std::set<std::string> ids;
    for (const auto& lot : dataset.lots()) {
        check_cell(lot.id());
        if (!ids.insert(lot.id()).second) fail(ErrorKind::Schema, "duplicate lot id '" + lot.id() + "'");
    }
    out << "lot_id,is_prime";
    for (const auto& name : dataset.feature_names()) out << ',' << name;
    out << '\n';
    for (const auto& lot : dataset.lots()) {
        for (std::size_t i = 0; i < lot.size(); ++i) {
            out << lot.id() << ',' << indicator(lot, i);
            for (double v : lot.choice(i)) out << ',' << format_number(v);
            out << '\n';
        }
    }
}

Dataset load_dataset(const std::string& path, bool strict_range) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open '" + path + "' for reading");
    try {
        return read_dataset(in, strict_range);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) fail(ErrorKind::Io, "write to '" + path + "' failed");
}

void save_dataset(const std::string& path, const Dataset& dataset) {
    std::ostringstream os;
    write_dataset(os, dataset);
    save_text(path, os.str());
}

std::vector<double> ScorerFile::aligned_to(const std::vector<std::string>& feature_names) const {
    std::map<std::string, double> by_name;
    for (std::size_t i = 0; i < names.size(); ++i) by_name[names[i]] = coefficients[i];
    std::string missing;
    std::vector<double> out;
    for (const auto& name : feature_names) {
        auto it = by_name.find(name);
        if (it == by_name.end()) {
            missing += (missing.empty() ? "" : ", ") + name + " (not in scorer)";
            continue;
        }
        out.push_back(it->second);
        by_name.erase(it);
    }
    for (const auto& [name, value] : by_name) missing += (missing.empty() ? "" : ", ") + name + " (not in dataset)";
    if (!missing.empty()) fail(ErrorKind::Schema, "scorer and dataset features differ: " + missing);
    return out;
}

ScoringFunction ScorerFile::scoring_function(const std::vector<std::string>& feature_names) const {
    auto coefficients = aligned_to(feature_names);
    if (kind == ScorerKind::Linear) return LinearScorer{std::move(coefficients)}.scoring_function();
    return LogisticModel{std::move(coefficients), bias}.scoring_function();
}

ScorerFile make_scorer_file(const std::vector<std::string>& names, const LinearScorer& scorer) {
    if (names.size() != scorer.coefficients.size())
        fail(ErrorKind::InvalidArgument, "scorer and name list differ in length");
    return ScorerFile{ScorerKind::Linear, names, scorer.coefficients, 0.0};
}

ScorerFile make_scorer_file(const std::vector<std::string>& names, const LogisticModel& model) {
    if (names.size() != model.weights.size())
        fail(ErrorKind::InvalidArgument, "model and name list differ in length");
    return ScorerFile{ScorerKind::Logistic, names, model.weights, model.bias};
}

ScorerFile read_scorer(std::istream& in) {
    ScorerFile file;
    bool saw_coef = false;
    bool saw_bias = false;
    bool saw_weight = false;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (is_blank(line)) continue;
        std::istringstream fields(line);
        std::string keyword, a, b, extra;
        fields >> keyword >> a;
        double v = 0.0;
        if (keyword == "bias") {
            if (saw_bias) fail(ErrorKind::Data, line_error(line_no, "duplicate bias line"));
            if ((fields >> extra) || !parse_double(a, v))
                fail(ErrorKind::Data, line_error(line_no, "expected 'bias <value>'"));
            file.bias = v;
            saw_bias = true;
            continue;
        }
        if (keyword != "coef" && keyword != "weight")
            fail(ErrorKind::Data, line_error(line_no, "unknown keyword '" + keyword + "'"));
        fields >> b;
        if (a.empty() || !parse_double(b, v) || (fields >> extra))
            fail(ErrorKind::Data, line_error(line_no, "expected '" + keyword + " <feature> <value>'"));
        if (!seen.insert(a).second) fail(ErrorKind::Data, line_error(line_no, "duplicate feature '" + a + "'"));
        (keyword == "coef" ? saw_coef : saw_weight) = true;
        file.names.push_back(a);
        file.coefficients.push_back(v);
    }
    if (saw_coef && (saw_weight || saw_bias))
        fail(ErrorKind::Data, "scorer file mixes 'coef' lines with logistic 'bias'/'weight' lines");
    if (file.names.empty()) fail(ErrorKind::Data, "scorer file has no coefficients");
    if (saw_weight && !saw_bias) fail(ErrorKind::Data, "logistic model file has no bias line");
    file.kind = saw_coef ? ScorerKind::Linear : ScorerKind::Logistic;
    return file;
}

void write_scorer(std::ostream& out, const ScorerFile& scorer) {
    for (const auto& name : scorer.names)
        if (name.empty() || name.find_first_of(" \t\r\n") != std::string::npos)
            fail(ErrorKind::Schema, "feature name '" + name + "' cannot be written to a scorer file");
    if (scorer.kind == ScorerKind::Logistic) out << "bias " << format_number(scorer.bias) << '\n';
    const char* keyword = scorer.kind == ScorerKind::Linear ? "coef" : "weight";
    for (std::size_t i = 0; i < scorer.names.size(); ++i)
        out << keyword << ' ' << scorer.names[i] << ' ' << format_number(scorer.coefficients[i]) << '\n';
}

ScorerFile load_scorer(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open '" + path + "' for reading");
    try {
        return read_scorer(in);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

void save_scorer(const std::string& path, const ScorerFile& scorer) {
    std::ostringstream os;
    write_scorer(os, scorer);
    save_text(path, os.str());
}

}  // namespace optchoice
