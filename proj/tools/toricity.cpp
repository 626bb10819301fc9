#include "toricity/io.hpp"

#include "CLI11.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>

namespace fs = std::filesystem;
using namespace toricity;
using nlohmann::ordered_json;

namespace {

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return 2;
        case ErrorKind::DimensionMismatch:
        case ErrorKind::Precondition:
        case ErrorKind::ZeroDynamics:
        case ErrorKind::EmptyLocus:
        case ErrorKind::InvalidChoice: return 3;
        default: return 1;
    }
}

MatrixInput load_matrix(const fs::path& path) {
    std::string text = read_file(path);
    return path.extension() == ".csv" ? parse_matrix_csv(text) : parse_matrix_json(text);
}

std::uint64_t parse_seed(const std::string& text) {
    try {
        std::size_t used = 0;
        auto v = std::stoull(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw ToricityError(ErrorKind::Parse, "invalid seed " + text);
}

RationalVector parse_kappa(const std::string& text) {
    RationalVector out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_rational(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// batch

ordered_json analyze_model(const fs::path& path, std::uint64_t seed) {
    ordered_json row;
    row["model"] = path.filename().string();
    if (model_kind(path) == ModelKind::Matrix) {
        auto in = load_matrix(path);
        AnalyzeOptions opts;
        opts.boundary = in.boundary;
        auto rep = analyze(in.system, in.mode, seed, opts);
        row["n"] = rep.n;
        row["m"] = rep.m;
        row["s"] = rep.s;
        row["d"] = rep.invariance ? ordered_json(rep.invariance->d) : ordered_json(nullptr);
        row["verdict"] = to_string(rep.verdict);
        row["nondegeneracy"] = rep.nondegeneracy ? to_string(rep.nondegeneracy->status) : "-";
        row["injectivity"] = rep.injectivity ? to_string(rep.injectivity->outcome) : "-";
        row["mixed_volume"] = rep.mixed_volume ? rep.mixed_volume->get_str() : "-";
        row["coset_count"] = rep.coset_count ? ordered_json(*rep.coset_count) : ordered_json(nullptr);
        row["coset_bound"] = rep.coset_bound ? ordered_json(rep.coset_bound->get_str()) : ordered_json(nullptr);
        row["acr"] = ordered_json::array();
        row["multistationarity"] = "-";
        return row;
    }
    auto net = parse_network(read_file(path));
    NetworkOptions opts;
    opts.seed = seed;
    opts.multistationarity = true;
    opts.acr = true;
    auto a = analyze_network(net, opts);
    const auto& rep = a.report;
    row["n"] = net.species.size();
    row["m"] = net.reactions.size();
    row["s"] = rep.s;
    row["d"] = a.A ? ordered_json(a.A->rows()) : ordered_json(nullptr);
    row["verdict"] = to_string(a.verdict);
    row["nondegeneracy"] = rep.nondegeneracy ? to_string(rep.nondegeneracy->status) : "-";
    row["injectivity"] = rep.injectivity ? to_string(rep.injectivity->outcome) : "-";
    row["mixed_volume"] = rep.mixed_volume ? rep.mixed_volume->get_str() : "-";
    row["coset_count"] = rep.coset_count ? ordered_json(*rep.coset_count) : ordered_json(nullptr);
    row["coset_bound"] = rep.coset_bound ? ordered_json(rep.coset_bound->get_str()) : ordered_json(nullptr);
    ordered_json acr = ordered_json::array();
    for (std::size_t i = 0; i < a.acr.size(); ++i)
        if (a.acr[i] == AcrFlag::ACR || a.acr[i] == AcrFlag::LocalACR) acr.push_back(net.species[i]);
    row["acr"] = acr;
    row["multistationarity"] = a.multistationarity ? to_string(a.multistationarity->outcome) : "-";
    return row;
}

ordered_json failure_row(const fs::path& path, const std::string& verdict, const std::string& message) {
    ordered_json row;
    row["model"] = path.filename().string();
    row["verdict"] = verdict;
    row["error"] = message;
    return row;
}

struct Job {
    std::size_t index;
    pid_t pid;
    int fd;
    std::string output;
    std::chrono::steady_clock::time_point start;
};

// Each model runs in a forked child that writes its JSON row to a pipe.
std::vector<ordered_json> run_batch(const std::vector<fs::path>& files, std::size_t jobs, double timeout,
                                    std::uint64_t base_seed, std::vector<double>& seconds) {
    std::vector<ordered_json> rows(files.size());
    seconds.assign(files.size(), 0.0);
    std::vector<Job> active;
    std::size_t next = 0;
    auto launch = [&](std::size_t i) {
        int fds[2];
        if (pipe(fds) != 0) throw std::runtime_error(std::string("pipe: ") + std::strerror(errno));
        std::cout.flush();
        pid_t pid = fork();
        if (pid < 0) throw std::runtime_error(std::string("fork: ") + std::strerror(errno));
        if (pid == 0) {
            close(fds[0]);
            std::string out;
            try {
                std::uint64_t seed = fnv1a(files[i].filename().string()) ^ base_seed;
                out = analyze_model(files[i], seed).dump();
            } catch (const std::exception& e) {
                out = failure_row(files[i], "Error", e.what()).dump();
            }
            std::size_t off = 0;
            while (off < out.size()) {
                ssize_t w = write(fds[1], out.data() + off, out.size() - off);
                if (w <= 0) break;
                off += static_cast<std::size_t>(w);
            }
            close(fds[1]);
            _exit(0);
        }
        close(fds[1]);
        active.push_back({i, pid, fds[0], {}, std::chrono::steady_clock::now()});
    };
    auto finish = [&](Job& job, bool timed_out) {
        int status = 0;
        if (timed_out) kill(job.pid, SIGKILL);
        waitpid(job.pid, &status, 0);
        close(job.fd);
        seconds[job.index] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - job.start).count();
        if (timed_out) {
            rows[job.index] = failure_row(files[job.index], "Timeout", "exceeded " + std::to_string(timeout) + " s");
            return;
        }
        try {
            rows[job.index] = ordered_json::parse(job.output);
        } catch (const std::exception&) {
            std::string why = WIFSIGNALED(status) ? "terminated by signal " + std::to_string(WTERMSIG(status))
                                                  : "no result from worker";
            rows[job.index] = failure_row(files[job.index], "Error", why);
        }
    };

    while (next < files.size() || !active.empty()) {
        while (next < files.size() && active.size() < jobs) launch(next++);
        std::vector<pollfd> pfds;
        for (const auto& j : active) pfds.push_back({j.fd, POLLIN, 0});
        poll(pfds.data(), pfds.size(), 50);
        auto now = std::chrono::steady_clock::now();
        for (std::size_t k = 0; k < active.size();) {
            Job& job = active[k];
            bool done = false;
            if (pfds[k].revents & (POLLIN | POLLHUP | POLLERR)) {
                char buf[4096];
                ssize_t r = read(job.fd, buf, sizeof buf);
                if (r > 0) {
                    job.output.append(buf, static_cast<std::size_t>(r));
                } else {
                    finish(job, false);
                    done = true;
                }
            }
            if (!done && std::chrono::duration<double>(now - job.start).count() > timeout) {
                finish(job, true);
                done = true;
            }
            if (done) {
                active.erase(active.begin() + static_cast<std::ptrdiff_t>(k));
                pfds.erase(pfds.begin() + static_cast<std::ptrdiff_t>(k));
            } else {
                ++k;
            }
        }
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric invariance and toricity of vertically parametrized systems"};
    app.require_subcommand(1);

    std::string file, mode_text = "positive", seed_text;
    bool json = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a system given by matrices (JSON or CSV)");
    analyze_cmd->add_option("file", file, "matrix file")->required();
    analyze_cmd->add_option("--mode", mode_text, "positive, real-star or complex-star");
    analyze_cmd->add_option("--seed", seed_text, "random seed");
    analyze_cmd->add_flag("--json", json, "emit the JSON report");

    bool do_analyze = false, reduce = false, no_reduce = false, multi = false, acr = false, structure = false;
    auto* network_cmd = app.add_subcommand("network", "Analyze a reaction network");
    network_cmd->add_option("file", file, "network file")->required();
    network_cmd->add_flag("--analyze", do_analyze, "run the toricity analysis (default)");
    network_cmd->add_flag("--reduce", reduce, "remove intermediates first (default)");
    network_cmd->add_flag("--no-reduce", no_reduce, "analyze the network as given");
    network_cmd->add_flag("--multistationarity", multi, "decide multistationarity");
    network_cmd->add_flag("--acr", acr, "detect absolute concentration robustness");
    network_cmd->add_flag("--structure", structure, "report deficiency and linkage classes");
    network_cmd->add_option("--mode", mode_text, "positive, real-star or complex-star");
    network_cmd->add_option("--seed", seed_text, "random seed");
    network_cmd->add_flag("--json", json, "emit the JSON report");

    std::string dir, report_path;
    std::size_t jobs = 1;
    double timeout = 60.0;
    bool timings = false;
    auto* batch_cmd = app.add_subcommand("batch", "Screen a directory of models");
    batch_cmd->add_option("dir", dir, "model directory")->required();
    batch_cmd->add_option("--report", report_path, "report file")->required();
    batch_cmd->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
    batch_cmd->add_option("--timeout", timeout, "seconds per model")->check(CLI::PositiveNumber);
    batch_cmd->add_flag("--timings", timings, "record wall time per model");

    std::string kappa_text, out_path;
    auto* export_cmd = app.add_subcommand("export", "Write the coset counting system for an external solver");
    export_cmd->add_option("file", file, "matrix file")->required();
    export_cmd->add_option("--kappa", kappa_text, "comma-separated parameter values")->required();
    export_cmd->add_option("--out", out_path, "output file")->required();
    export_cmd->add_option("--seed", seed_text, "random seed for the slice point");

    CLI11_PARSE(app, argc, argv);

    try {
        std::uint64_t seed = seed_text.empty() ? default_seed() : parse_seed(seed_text);
        GroupMode mode = parse_group_mode(mode_text);

        if (*analyze_cmd) {
            auto in = load_matrix(file);
            AnalyzeOptions opts;
            opts.boundary = in.boundary;
            if (analyze_cmd->count("--mode") == 0) mode = in.mode;
            auto rep = analyze(in.system, mode, seed, opts);
            if (json) {
                std::cout << to_json(rep).dump(2) << "\n";
            } else {
                std::cout << render_text(rep);
            }
            return 0;
        }
        if (*network_cmd) {
            if (reduce && no_reduce) throw ToricityError(ErrorKind::Parse, "--reduce and --no-reduce are exclusive");
            auto net = parse_network(read_file(file));
            NetworkOptions opts;
            opts.mode = mode;
            opts.seed = seed;
            opts.reduce = !no_reduce;
            opts.multistationarity = multi;
            opts.acr = acr;
            opts.structure = structure;
            auto a = analyze_network(net, opts);
            if (json) {
                std::cout << to_json(a).dump(2) << "\n";
            } else {
                std::cout << render_text(a);
            }
            return 0;
        }
        if (*batch_cmd) {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(dir))
                if (entry.is_regular_file()) files.push_back(entry.path());
            std::sort(files.begin(), files.end(),
                      [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
            std::vector<double> seconds;
            auto rows = run_batch(files, jobs, timeout, seed, seconds);
            ordered_json report;
            report["schema"] = 1;
            report["models"] = ordered_json::array();
            std::map<std::string, std::size_t> counts;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (timings) rows[i]["wall_time"] = seconds[i];
                counts[rows[i]["verdict"].get<std::string>()]++;
                report["models"].push_back(rows[i]);
            }
            ordered_json summary;
            summary["total"] = rows.size();
            for (const char* v : {"EmptyPositiveLocus", "InvariantOnly", "NotLocallyToric", "GenericallyLocallyToric",
                                  "GenericallyToric", "LocallyToric", "Toric", "Timeout", "Error"})
                summary[v] = counts[v];
            report["summary"] = summary;
            std::ofstream out(report_path, std::ios::binary);
            if (!out) throw ToricityError(ErrorKind::Precondition, "cannot write " + report_path);
            out << report.dump(2) << "\n";
            std::cout << "wrote " << rows.size() << " rows to " << report_path << "\n";
            return 0;
        }
        if (*export_cmd) {
            auto in = load_matrix(file);
            auto kappa = parse_kappa(kappa_text);
            if (kappa.size() != in.system.m()) {
                throw ToricityError(ErrorKind::DimensionMismatch, "kappa has " + std::to_string(kappa.size()) +
                                                                      " entries, expected " + std::to_string(in.system.m()));
            }
            auto inv = invariance_group(in.system, GroupMode::Positive);
            auto h = coset_counting_system(in.system, inv, kappa, seed);
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw ToricityError(ErrorKind::Precondition, "cannot write " + out_path);
            out << exchange_format(h);
            std::cout << "wrote " << out_path << "\n";
            return 0;
        }
    } catch (const ToricityError& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
