from phoenixlib._src.defaults.defaults_utility import (
    SUPPORTED_PLOTTING_BACKENDS,
    MagicProperties,
    get_defaults_dict,
    validate_property_class,
)


def _positive_number(val):
    return isinstance(val, int | float) and not isinstance(val, bool) and val > 0


def _positive_int(val):
    return isinstance(val, int) and not isinstance(val, bool) and val > 0


def _non_negative_number(val):
    return isinstance(val, int | float) and not isinstance(val, bool) and val >= 0


class DefaultSettings(MagicProperties):
    """Library default settings.

    Parameters
    ----------
    ingest: dict or Ingest
        Feed polling and article fetching settings.

    coder: dict or Coder
        Sentence coding settings.

    pipeline: dict or Pipeline
        Daily run settings.

    serve: dict or Serve
        HTTP coding endpoint settings.

    report: dict or Report
        Aggregate report settings.
    """

    def __init__(
        self,
        ingest=None,
        coder=None,
        pipeline=None,
        serve=None,
        report=None,
        **kwargs,
    ):
        super().__init__(
            ingest=ingest,
            coder=coder,
            pipeline=pipeline,
            serve=serve,
            report=report,
            **kwargs,
        )
        self.reset()

    def reset(self):
        """Resets all nested properties to their hard coded default values"""
        self.update(get_defaults_dict(), _match_properties=False)
        return self

    @property
    def ingest(self):
        """`Ingest` class containing feed polling and fetching settings."""
        return self._ingest

    @ingest.setter
    def ingest(self, val):
        self._ingest = validate_property_class(val, "ingest", Ingest, self)

    @property
    def coder(self):
        """`Coder` class containing sentence coding settings."""
        return self._coder

    @coder.setter
    def coder(self, val):
        self._coder = validate_property_class(val, "coder", Coder, self)

    @property
    def pipeline(self):
        """`Pipeline` class containing daily run settings."""
        return self._pipeline

    @pipeline.setter
    def pipeline(self, val):
        self._pipeline = validate_property_class(val, "pipeline", Pipeline, self)

    @property
    def serve(self):
        """`Serve` class containing HTTP endpoint settings."""
        return self._serve

    @serve.setter
    def serve(self, val):
        self._serve = validate_property_class(val, "serve", Serve, self)

    @property
    def report(self):
        """`Report` class containing aggregate report settings."""
        return self._report

    @report.setter
    def report(self, val):
        self._report = validate_property_class(val, "report", Report, self)


class Ingest(MagicProperties):
    """
    Defines the properties of feed polling and article fetching.

    Properties
    ----------
    pollinterval: int, default=3600
        Seconds between two poll cycles of the feed roster.

    timeout: float, default=30
        Per-request timeout in seconds.

    maxretries: int, default=3
        Maximum number of attempts for a single article download.

    backoff: float, default=1.0
        Base delay in seconds of the exponential retry backoff. The n-th retry waits
        `backoff * 2**(n-1)` seconds.

    politeness: float, default=2.0
        Minimum delay in seconds between two requests to the same host.

    useragent: str
        User-agent header sent with every request.

    poolsize: int, default=4
        Number of concurrent fetch workers.

    mintext: int, default=250
        Minimum number of characters of extracted main content.

    languages: tuple of str, default=('en',)
        Language tags of the feeds that are polled. Other feeds are skipped.
    """

    @property
    def pollinterval(self):
        """Seconds between two poll cycles."""
        return self._pollinterval

    @pollinterval.setter
    def pollinterval(self, val):
        assert val is None or _positive_number(val), (
            f"The `pollinterval` property of {type(self).__name__} must be a strictly positive"
            f" number but received {val!r} instead."
        )
        self._pollinterval = val

    @property
    def timeout(self):
        """Per-request timeout in seconds."""
        return self._timeout

    @timeout.setter
    def timeout(self, val):
        assert val is None or _positive_number(val), (
            f"The `timeout` property of {type(self).__name__} must be a strictly positive"
            f" number but received {val!r} instead."
        )
        self._timeout = val

    @property
    def maxretries(self):
        """Maximum number of attempts per article."""
        return self._maxretries

    @maxretries.setter
    def maxretries(self, val):
        assert val is None or _positive_int(val), (
            f"The `maxretries` property of {type(self).__name__} must be a strictly positive"
            f" integer but received {val!r} instead."
        )
        self._maxretries = val

    @property
    def backoff(self):
        """Base delay of the exponential retry backoff in seconds."""
        return self._backoff

    @backoff.setter
    def backoff(self, val):
        assert val is None or _non_negative_number(val), (
            f"The `backoff` property of {type(self).__name__} must be a positive number or"
            f" zero but received {val!r} instead."
        )
        self._backoff = val

    @property
    def politeness(self):
        """Minimum delay between two requests to the same host in seconds."""
        return self._politeness

    @politeness.setter
    def politeness(self, val):
        assert val is None or _non_negative_number(val), (
            f"The `politeness` property of {type(self).__name__} must be a positive number or"
            f" zero but received {val!r} instead."
        )
        self._politeness = val

    @property
    def useragent(self):
        """User-agent header sent with every request."""
        return self._useragent

    @useragent.setter
    def useragent(self, val):
        assert val is None or (isinstance(val, str) and val.strip()), (
            f"The `useragent` property of {type(self).__name__} must be a non-empty string"
            f" but received {val!r} instead."
        )
        self._useragent = val

    @property
    def poolsize(self):
        """Number of concurrent fetch workers."""
        return self._poolsize

    @poolsize.setter
    def poolsize(self, val):
        assert val is None or _positive_int(val), (
            f"The `poolsize` property of {type(self).__name__} must be a strictly positive"
            f" integer but received {val!r} instead."
        )
        self._poolsize = val

    @property
    def mintext(self):
        """Minimum number of characters of extracted main content."""
        return self._mintext

    @mintext.setter
    def mintext(self, val):
        assert val is None or (isinstance(val, int) and val >= 0), (
            f"The `mintext` property of {type(self).__name__} must be a positive integer or"
            f" zero but received {val!r} instead."
        )
        self._mintext = val

    @property
    def languages(self):
        """Language tags of the polled feeds."""
        return self._languages

    @languages.setter
    def languages(self, val):
        if val is not None:
            if isinstance(val, str):
                val = (val,)
            try:
                val = tuple(str(v).lower() for v in val)
            except TypeError as err:
                msg = (
                    f"The `languages` property of {type(self).__name__} must be an "
                    f"iterable of language tags but received {val!r} instead"
                )
                raise ValueError(msg) from err
        self._languages = val


class Coder(MagicProperties):
    """
    Defines the properties of the sentence coder.

    Properties
    ----------
    maxdepth: int, default=3
        Sentences whose main clause nests more clause levels are skipped as too complex.
    """

    @property
    def maxdepth(self):
        """Maximum number of nested clause levels."""
        return self._maxdepth

    @maxdepth.setter
    def maxdepth(self, val):
        assert val is None or _positive_int(val), (
            f"The `maxdepth` property of {type(self).__name__} must be a strictly positive"
            f" integer but received {val!r} instead."
        )
        self._maxdepth = val


class Pipeline(MagicProperties):
    """
    Defines the properties of daily runs.

    Properties
    ----------
    dedup: bool, default=True
        Apply the one-a-day filter.

    geolocate: bool, default=False
        Fill the geolocation columns from the gazetteer.

    outputdir: str, default='.'
        Directory receiving records files and manifests.
    """

    @property
    def dedup(self):
        """Apply the one-a-day filter."""
        return self._dedup

    @dedup.setter
    def dedup(self, val):
        assert val is None or isinstance(val, bool), (
            f"The `dedup` property of {type(self).__name__} must be a either `True` or `False`"
            f" but received {val!r} instead."
        )
        self._dedup = val

    @property
    def geolocate(self):
        """Fill the geolocation columns."""
        return self._geolocate

    @geolocate.setter
    def geolocate(self, val):
        assert val is None or isinstance(val, bool), (
            f"The `geolocate` property of {type(self).__name__} must be a either `True` or"
            f" `False` but received {val!r} instead."
        )
        self._geolocate = val

    @property
    def outputdir(self):
        """Directory receiving records files and manifests."""
        return self._outputdir

    @outputdir.setter
    def outputdir(self, val):
        self._outputdir = None if val is None else str(val)


class Serve(MagicProperties):
    """
    Defines the properties of the HTTP coding endpoint.

    Properties
    ----------
    host: str, default='127.0.0.1'
        Interface to bind.

    port: int, default=8000
        TCP port to bind.
    """

    @property
    def host(self):
        """Interface to bind."""
        return self._host

    @host.setter
    def host(self, val):
        assert val is None or (isinstance(val, str) and val), (
            f"The `host` property of {type(self).__name__} must be a non-empty string"
            f" but received {val!r} instead."
        )
        self._host = val

    @property
    def port(self):
        """TCP port to bind."""
        return self._port

    @port.setter
    def port(self, val):
        assert val is None or (_positive_int(val) and val < 65536), (
            f"The `port` property of {type(self).__name__} must be an integer in [1, 65535]"
            f" but received {val!r} instead."
        )
        self._port = val


class Report(MagicProperties):
    """
    Defines the properties of aggregate reports.

    Properties
    ----------
    topn: int, default=10
        Number of rows kept by the `top_*` report kinds.

    backend: str, default='matplotlib'
        Plotting backend used by `plot_report`. Supported backends are defined in
        `phoenixlib.SUPPORTED_PLOTTING_BACKENDS`.
    """

    @property
    def topn(self):
        """Number of rows kept by the `top_*` report kinds."""
        return self._topn

    @topn.setter
    def topn(self, val):
        assert val is None or _positive_int(val), (
            f"The `topn` property of {type(self).__name__} must be a strictly positive"
            f" integer but received {val!r} instead."
        )
        self._topn = val

    @property
    def backend(self):
        """Plotting backend used by `plot_report`."""
        return self._backend

    @backend.setter
    def backend(self, val):
        assert val is None or val in SUPPORTED_PLOTTING_BACKENDS, (
            f"the `backend` property of {type(self).__name__} must be one of"
            f"{SUPPORTED_PLOTTING_BACKENDS}"
            f" but received {val!r} instead"
        )
        self._backend = val


default_settings = DefaultSettings()
