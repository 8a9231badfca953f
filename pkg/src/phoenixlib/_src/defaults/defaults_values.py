"""Package level config defaults"""

DEFAULTS = {
    "ingest": {
        "pollinterval": 3600,
        "timeout": 30,
        "maxretries": 3,
        "backoff": 1.0,
        "politeness": 2.0,
        "useragent": "phoenixlib-scraper/1.0",
        "poolsize": 4,
        "mintext": 250,
        "languages": ("en",),
    },
    "coder": {
        "maxdepth": 3,
    },
    "pipeline": {
        "dedup": True,
        "geolocate": False,
        "outputdir": ".",
    },
    "serve": {
        "host": "127.0.0.1",
        "port": 8000,
    },
    "report": {
        "topn": 10,
        "backend": "matplotlib",
    },
}
