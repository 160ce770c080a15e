#include "redsolve/process_denoiser.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <csignal>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "redsolve/pgm.hpp"

namespace redsolve {

namespace {

void write_all(int fd, const char* data, std::size_t n) {
  std::size_t off = 0;
  while (off < n) {
    const ssize_t w = ::write(fd, data + off, n - off);
    if (w < 0) {
      if (errno == EINTR) continue;
      return; // child closed its stdin early; exit status decides success
    }
    off += static_cast<std::size_t>(w);
  }
}

std::string read_all(int fd) {
  std::string out;
  char buf[65536];
  for (;;) {
    const ssize_t r = ::read(fd, buf, sizeof buf);
    if (r < 0) {
      if (errno == EINTR) continue;
      throw std::runtime_error("ProcessDenoiser: read from child failed");
    }
    if (r == 0) break;
    out.append(buf, static_cast<std::size_t>(r));
  }
  return out;
}

struct SigpipeGuard {
  SigpipeGuard() { std::signal(SIGPIPE, SIG_IGN); }
};

} // namespace

ProcessDenoiser::ProcessDenoiser(std::string command) : command_(std::move(command)) {
  if (command_.empty())
    throw std::invalid_argument("ProcessDenoiser: empty command");
}

Image ProcessDenoiser::do_denoise(const Image& x) const {
  static SigpipeGuard guard;

  std::ostringstream request;
  write_pgm(request, x);
  const std::string payload = request.str();

  int to_child[2], from_child[2];
  if (::pipe(to_child) != 0)
    throw std::runtime_error("ProcessDenoiser: pipe failed");
  if (::pipe(from_child) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw std::runtime_error("ProcessDenoiser: pipe failed");
  }

  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    ::close(from_child[0]);
    ::close(from_child[1]);
    throw std::runtime_error("ProcessDenoiser: fork failed");
  }
  if (pid == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    ::close(to_child[0]);
    ::close(to_child[1]);
    ::close(from_child[0]);
    ::close(from_child[1]);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }

  ::close(to_child[0]);
  ::close(from_child[1]);

  std::thread writer([fd = to_child[1], &payload] {
    write_all(fd, payload.data(), payload.size());
    ::close(fd);
  });

  std::string response;
  std::exception_ptr read_error;
  try {
    response = read_all(from_child[0]);
  } catch (...) {
    read_error = std::current_exception();
  }
  ::close(from_child[0]);
  writer.join();

  int status = 0;
  if (::waitpid(pid, &status, 0) < 0)
    throw std::runtime_error("ProcessDenoiser: waitpid failed");
  if (read_error) std::rethrow_exception(read_error);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
    throw std::runtime_error("ProcessDenoiser: child '" + command_ +
                             "' failed with status " + std::to_string(status));

  std::istringstream in(response);
  Image out = read_pgm(in);
  if (!(out.dims() == x.dims()))
    throw std::runtime_error("ProcessDenoiser: child returned mismatched dimensions");
  return out;
}

} // namespace redsolve
