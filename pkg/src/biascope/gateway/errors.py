"""Gateway failure modes, kept distinct so callers can route them."""


class GatewayError(Exception):
    """Base class for all gateway failures."""


class MissingSlotError(GatewayError):
    """A template slot required by the prompt kind is absent or blank."""


class TransportError(GatewayError):
    """Provider call failed after exhausting retries."""


class ReplayMissError(GatewayError):
    """Replay mode was asked for a request digest the fixture lacks."""


class EmptyInputError(GatewayError):
    """embed_texts received no texts, or a text that is blank."""


class DimensionMismatchError(GatewayError):
    """Provider returned an embedding of the wrong length."""
