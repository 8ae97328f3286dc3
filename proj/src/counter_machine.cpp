#include "pta/counter_machine.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pta {

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
    std::vector<std::string> toks;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string w;
        while (ls >> w) {
            while (!w.empty() && w.back() == ';') {
                w.pop_back();
                if (!w.empty()) toks.push_back(w);
                toks.push_back(";");
                w.clear();
                break;
            }
            if (!w.empty()) toks.push_back(w);
        }
    }
    return toks;
}

unsigned counter_index(const std::string& t) {
    if (t == "c1") return 0;
    if (t == "c2") return 1;
    throw std::runtime_error("counter must be c1 or c2, got '" + t + "'");
}

}  // namespace

CounterMachine parse_counter_machine(const std::string& text) {
    std::vector<std::string> toks = tokens_of(text);
    CounterMachine cm;
    std::map<std::string, unsigned> ids;
    auto state_id = [&](const std::string& n) {
        auto it = ids.find(n);
        if (it != ids.end()) return it->second;
        unsigned id = static_cast<unsigned>(cm.state_names.size());
        cm.state_names.push_back(n);
        cm.ops.emplace_back();
        ids.emplace(n, id);
        return id;
    };

    std::size_t pos = 0;
    auto take = [&]() -> const std::string& {
        if (pos >= toks.size()) throw std::runtime_error("unexpected end of machine program");
        return toks[pos++];
    };
    auto expect = [&](const std::string& w) {
        const std::string& t = take();
        if (t != w) throw std::runtime_error("expected '" + w + "', got '" + t + "'");
    };

    bool have_halt = false;
    bool first = true;
    std::vector<unsigned> defined;
    while (pos < toks.size()) {
        const std::string& kw = take();
        if (kw == "state") {
            unsigned id = state_id(take());
            expect(";");
            if (std::find(defined.begin(), defined.end(), id) != defined.end())
                throw std::runtime_error("state '" + cm.state_names[id] +
                                         "' defined twice (machine must be deterministic)");
            defined.push_back(id);
            if (first) {
                cm.initial = id;
                first = false;
            }
            const std::string& op = take();
            if (op == "inc") {
                unsigned c = counter_index(take());
                expect("goto");
                unsigned tgt = state_id(take());
                expect(";");
                cm.ops[id] = CounterMachine::Inc{c, tgt};
            } else if (op == "tdec") {
                unsigned c = counter_index(take());
                expect("zero");
                unsigned z = state_id(take());
                expect("else");
                unsigned d = state_id(take());
                expect(";");
                cm.ops[id] = CounterMachine::TDec{c, z, d};
            } else {
                throw std::runtime_error("expected 'inc' or 'tdec', got '" + op + "'");
            }
        } else if (kw == "halt") {
            if (have_halt) throw std::runtime_error("more than one halt state");
            cm.halt = state_id(take());
            expect(";");
            have_halt = true;
            if (first) {
                cm.initial = cm.halt;
                first = false;
            }
        } else {
            throw std::runtime_error("expected 'state' or 'halt', got '" + kw + "'");
        }
    }
    if (!have_halt) throw std::runtime_error("machine has no halt state");
    if (cm.state_names.empty()) throw std::runtime_error("machine has no states");
    if (!std::holds_alternative<std::monostate>(cm.ops[cm.halt]))
        throw std::runtime_error("halt state cannot have a transition");
    return cm;
}

std::string render_counter_machine(const CounterMachine& cm) {
    std::ostringstream out;
    for (unsigned s = 0; s < cm.state_names.size(); ++s) {
        if (s == cm.halt) continue;
        out << "state " << cm.state_names[s] << " ; ";
        if (auto* inc = std::get_if<CounterMachine::Inc>(&cm.ops[s])) {
            out << "inc c" << inc->counter + 1 << " goto " << cm.state_names[inc->target]
                << " ;\n";
        } else if (auto* td = std::get_if<CounterMachine::TDec>(&cm.ops[s])) {
            out << "tdec c" << td->counter + 1 << " zero " << cm.state_names[td->zero_target]
                << " else " << cm.state_names[td->dec_target] << " ;\n";
        } else {
            out << ";\n";
        }
    }
    out << "halt " << cm.state_names[cm.halt] << " ;\n";
    return out.str();
}

SimulationResult simulate(const CounterMachine& cm, std::size_t max_steps) {
    SimulationResult r;
    MachineConfig cfg{cm.initial, 0, 0};
    r.trace.push_back(cfg);
    while (r.steps < max_steps) {
        if (cfg.state == cm.halt) {
            r.halted = true;
            return r;
        }
        const CounterMachine::Op& op = cm.ops[cfg.state];
        if (auto* inc = std::get_if<CounterMachine::Inc>(&op)) {
            (inc->counter == 0 ? cfg.c1 : cfg.c2) += 1;
            cfg.state = inc->target;
        } else if (auto* td = std::get_if<CounterMachine::TDec>(&op)) {
            std::uint64_t& c = td->counter == 0 ? cfg.c1 : cfg.c2;
            if (c == 0) {
                cfg.state = td->zero_target;
            } else {
                --c;
                cfg.state = td->dec_target;
            }
        } else {
            return r;  // stuck in a non-halt state without a transition
        }
        ++r.steps;
        r.max_counter = std::max({r.max_counter, cfg.c1, cfg.c2});
        r.trace.push_back(cfg);
    }
    if (cfg.state == cm.halt) r.halted = true;
    return r;
}

}  // namespace pta
