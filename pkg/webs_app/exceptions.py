# webs_app/exceptions.py
"""Exception hierarchy shared by the engine, the commands and the views."""


class WebsError(Exception):
    """Base class for every error raised by webs_app."""


class FieldError(WebsError, ValueError):
    pass


class CombinatoricsError(WebsError, ValueError):
    pass


class WeightError(WebsError, ValueError):
    pass


class BoundaryMismatch(WebsError, ValueError):
    """Labels or colors on two boundaries that are glued do not agree."""


class LabelError(WebsError, ValueError):
    pass


class DiagramFormatError(WebsError, ValueError):
    pass


class CatalogError(WebsError):
    pass
