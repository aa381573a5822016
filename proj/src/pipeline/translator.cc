#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <mutex>

#include "httplib.h"
#include "transguard/translator.h"

extern char** environ;

namespace transguard {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::kTranslatorFailure, message); }

std::string errno_text(const char* what) { return std::string(what) + ": " + std::strerror(errno); }

class Pipe {
 public:
  Pipe() {
    if (::pipe2(fds_, O_CLOEXEC) != 0) fail(errno_text("pipe"));
  }
  ~Pipe() {
    close_read();
    close_write();
  }
  Pipe(const Pipe&) = delete;
  Pipe& operator=(const Pipe&) = delete;

  int read_end() const { return fds_[0]; }
  int write_end() const { return fds_[1]; }
  void close_read() { close_fd(fds_[0]); }
  void close_write() { close_fd(fds_[1]); }

 private:
  static void close_fd(int& fd) {
    if (fd >= 0) ::close(fd);
    fd = -1;
  }
  int fds_[2] = {-1, -1};
};

class SubprocessTranslator : public Translator {
 public:
  SubprocessTranslator(std::string command, double timeout_s) : command_(std::move(command)), timeout_s_(timeout_s) {}

  TranslatorKind kind() const override { return TranslatorKind::kSubprocess; }

  std::string translate(const std::string& text, Direction direction) const override {
    CommandResult r = run_command(command_, {std::string(to_string(direction))}, text, timeout_s_);
    if (r.timed_out) fail("timed out after " + std::to_string(timeout_s_) + " s: " + command_);
    if (r.exit_code != 0) {
      std::string why = r.exit_code >= 0 ? "exit status " + std::to_string(r.exit_code) : "killed by a signal";
      if (!r.err.empty()) why += ": " + r.err.substr(0, 400);
      fail(why);
    }
    return r.out;
  }

 private:
  std::string command_;
  double timeout_s_;
};

class HttpTranslator : public Translator {
 public:
  HttpTranslator(std::string url, double timeout_s) : timeout_s_(timeout_s) {
    auto scheme = url.find("://");
    auto slash = url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    base_ = url.substr(0, slash);
    path_ = slash == std::string::npos ? "/" : url.substr(slash);
  }

  TranslatorKind kind() const override { return TranslatorKind::kHttp; }

  std::string translate(const std::string& text, Direction direction) const override {
    httplib::Client client(base_);
    if (!client.is_valid()) fail("invalid translator url " + base_);
    auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::duration<double>(timeout_s_));
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    httplib::Headers headers = {{"X-Direction", std::string(to_string(direction))}};
    auto res = client.Post(path_, headers, text, "text/plain; charset=utf-8");
    if (!res) fail("http " + base_ + path_ + ": " + httplib::to_string(res.error()));
    if (res->status != 200) fail("http status " + std::to_string(res->status) + " from " + base_ + path_);
    return res->body;
  }

 private:
  std::string base_;
  std::string path_;
  double timeout_s_;
};

}  // namespace

CommandResult run_command(const std::string& command, const std::vector<std::string>& args, const std::string& input,
                          double timeout_s) {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
  Pipe in;
  Pipe out;
  Pipe err;
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in.read_end(), 0);
  posix_spawn_file_actions_adddup2(&actions, out.write_end(), 1);
  posix_spawn_file_actions_adddup2(&actions, err.write_end(), 2);

  std::string script = command + " \"$@\"";
  std::vector<const char*> argv = {"/bin/sh", "-c", script.c_str(), "sh"};
  for (const auto& a : args) argv.push_back(a.c_str());
  argv.push_back(nullptr);
  pid_t pid = 0;
  int rc = posix_spawn(&pid, "/bin/sh", &actions, nullptr, const_cast<char* const*>(argv.data()), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) {
    errno = rc;
    fail(errno_text("spawn"));
  }
  in.close_read();
  out.close_write();
  err.close_write();
  ::fcntl(in.write_end(), F_SETFL, O_NONBLOCK);

  CommandResult result;
  std::size_t written = 0;
  if (input.empty()) in.close_write();
  auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_s);
  while (out.read_end() >= 0 || err.read_end() >= 0) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      result.timed_out = true;
      break;
    }
    pollfd fds[3];
    int n = 0;
    if (out.read_end() >= 0) fds[n++] = {out.read_end(), POLLIN, 0};
    if (err.read_end() >= 0) fds[n++] = {err.read_end(), POLLIN, 0};
    if (in.write_end() >= 0) fds[n++] = {in.write_end(), POLLOUT, 0};
    int ready = ::poll(fds, static_cast<nfds_t>(n), static_cast<int>(std::min<long long>(left.count(), 1000)));
    if (ready < 0 && errno != EINTR) break;
    for (int i = 0; i < n; ++i) {
      if (!fds[i].revents) continue;
      if (fds[i].fd == in.write_end()) {
        ssize_t k = ::write(in.write_end(), input.data() + written, input.size() - written);
        if (k > 0) written += static_cast<std::size_t>(k);
        if (k < 0 && errno != EAGAIN) written = input.size();  // reader gone
        if (written >= input.size()) in.close_write();
        continue;
      }
      char buf[8192];
      ssize_t k = ::read(fds[i].fd, buf, sizeof buf);
      bool is_out = fds[i].fd == out.read_end();
      if (k > 0) {
        (is_out ? result.out : result.err).append(buf, static_cast<std::size_t>(k));
      } else if (k == 0 || errno != EINTR) {
        is_out ? out.close_read() : err.close_read();
      }
    }
  }
  if (result.timed_out) ::kill(pid, SIGKILL);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::unique_ptr<Translator> subprocess_translator(std::string command, double timeout_s) {
  return std::make_unique<SubprocessTranslator>(std::move(command), timeout_s);
}

std::unique_ptr<Translator> http_translator(std::string url, double timeout_s) {
  return std::make_unique<HttpTranslator>(std::move(url), timeout_s);
}

}  // namespace transguard
