import logging
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import urlsplit

import pytest

import phoenixlib as phx
from phoenixlib.dictionaries import load_dictionaries
from phoenixlib.enrich import EnrichTables, load_gazetteer, load_goldstein_table

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def _reset_defaults():
    """every test starts from and leaves the hard coded defaults"""
    phx.defaults.reset()
    yield
    phx.defaults.reset()
    # the command line installs its own handler on the package logger
    pkg_logger = logging.getLogger("phoenixlib")
    for handler in list(pkg_logger.handlers):
        pkg_logger.removeHandler(handler)
    pkg_logger.setLevel(logging.NOTSET)


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR


@pytest.fixture(scope="session")
def toy_dicts():
    return load_dictionaries(
        DATA_DIR / "actors.txt",
        DATA_DIR / "verbs.txt",
        DATA_DIR / "issues.txt",
        DATA_DIR / "code_sets.txt",
    )


@pytest.fixture(scope="session")
def gazetteer():
    return load_gazetteer(DATA_DIR / "gazetteer.tsv")


@pytest.fixture
def toy_tables(toy_dicts):
    return EnrichTables(toy_dicts, load_goldstein_table())


@pytest.fixture
def dict_args():
    """global command line flags pointing at the toy dictionaries"""
    return [
        "--actors",
        str(DATA_DIR / "actors.txt"),
        "--verbs",
        str(DATA_DIR / "verbs.txt"),
        "--issues",
        str(DATA_DIR / "issues.txt"),
        "--code-sets",
        str(DATA_DIR / "code_sets.txt"),
    ]


###########################################################
###########################################################
# FIXTURE HTTP SERVER


def article_html(title, paragraphs, nav_links=5):
    """article page with navigation, a main text block and a footer"""
    nav = "".join(f'<li><a href="/section/{i}">Section {i}</a></li>' for i in range(nav_links))
    body = "".join(f"<p>{p}</p>" for p in paragraphs)
    return (
        "<html><head>"
        f"<title>{title} | Example News</title>"
        f'<meta property="og:title" content="{title}">'
        "<script>var tracking = 1;</script>"
        "</head><body>"
        f'<div id="main-nav"><ul>{nav}</ul></div>'
        f'<div class="article-body"><h1>{title}</h1>{body}</div>'
        '<div class="sidebar related"><p><a href="/x">Read more</a></p></div>'
        "<footer><p>Copyright Example News</p></footer>"
        "</body></html>"
    )


def rss_feed(links):
    items = "".join(f"<item><title>t</title><link>{url}</link></item>" for url in links)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>'
        f'<rss version="2.0"><channel><title>feed</title>{items}</channel></rss>'
    )


def atom_feed(links):
    entries = "".join(
        f'<entry><title>t</title><link rel="alternate" href="{url}"/></entry>' for url in links
    )
    return f'<feed xmlns="http://www.w3.org/2005/Atom"><title>feed</title>{entries}</feed>'


class FixtureSite:
    """Routes of the fixture server.

    Every path maps to a script of (status, body, content type) responses; the
    last response of a script repeats once the script is used up.
    """

    def __init__(self):
        self.base_url = ""
        self._scripts = {}
        self._lock = threading.Lock()
        self.hits = {}

    def add(self, path, body, status=200, content_type="text/html; charset=utf-8"):
        self.script(path, [(status, body, content_type)])

    def script(self, path, responses):
        with self._lock:
            self._scripts[path] = [
                r if len(r) == 3 else (*r, "text/html; charset=utf-8") for r in responses
            ]
            self.hits[path] = 0

    def url(self, path):
        return f"{self.base_url}{path}"

    def respond(self, path):
        with self._lock:
            script = self._scripts.get(path)
            if script is None:
                return 404, "not found", "text/plain"
            n = self.hits[path]
            self.hits[path] = n + 1
            return script[min(n, len(script) - 1)]


def _handler_for(site):
    class Handler(BaseHTTPRequestHandler):
        def do_GET(self):  # noqa: N802
            status, body, content_type = site.respond(urlsplit(self.path).path)
            data = body.encode("utf-8") if isinstance(body, str) else body
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(data)))
            self.end_headers()
            self.wfile.write(data)

        def log_message(self, format, *args):  # noqa: A002
            pass

    return Handler


@pytest.fixture
def fixture_site(monkeypatch):
    """threaded local HTTP server serving scripted feeds and article pages"""
    for var in ("HTTP_PROXY", "HTTPS_PROXY", "ALL_PROXY", "http_proxy", "https_proxy", "all_proxy"):
        monkeypatch.delenv(var, raising=False)
    site = FixtureSite()
    server = ThreadingHTTPServer(("127.0.0.1", 0), _handler_for(site))
    server.daemon_threads = True
    site.base_url = f"http://127.0.0.1:{server.server_address[1]}"
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield site
    server.shutdown()
    server.server_close()
    thread.join()
