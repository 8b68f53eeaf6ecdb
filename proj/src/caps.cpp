#include "ufdlab/caps.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>

namespace ufdlab {

namespace {

std::mutex caps_mutex;
std::optional<Caps> caps_value;
thread_local std::optional<Clock::time_point> deadline;

}  // namespace

Caps parse_caps(const std::string& text, Caps base) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("malformed caps entry '" + item + "'");
        std::string key = item.substr(0, eq);
        long long value = 0;
        try {
            value = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed caps value in '" + item + "'");
        }
        if (value <= 0) throw std::invalid_argument("caps must be positive: '" + item + "'");
        if (key == "degree") {
            base.degree = static_cast<int>(value);
        } else if (key == "terms") {
            base.terms = static_cast<std::size_t>(value);
        } else {
            throw std::invalid_argument("unknown caps key '" + key + "'");
        }
    }
    return base;
}

Caps current_caps() {
    std::lock_guard lock(caps_mutex);
    if (!caps_value) {
        const char* env = std::getenv("UFDLAB_CAPS");
        caps_value = env ? parse_caps(env) : Caps{};
    }
    return *caps_value;
}

void set_caps(const Caps& caps) {
    std::lock_guard lock(caps_mutex);
    caps_value = caps;
}

DeadlineGuard::DeadlineGuard(std::optional<Clock::duration> budget) : previous_(deadline) {
    if (budget) deadline = Clock::now() + *budget;
}

DeadlineGuard::~DeadlineGuard() { deadline = previous_; }

void check_deadline() {
    if (deadline && Clock::now() > *deadline) throw Timeout();
}

}  // namespace ufdlab
