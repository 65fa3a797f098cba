class ApiException(Exception):
    pass


class BadInput(ApiException):
    """
    Will be raised if a command line value passes the schema but cannot be interpreted, e.g. an unknown AF notation.
    """
    def __init__(self, option: str, value: str, reason: str = ''):
        super().__init__()
        self.option = option
        self.value = value
        self.reason = reason

    def __str__(self):
        msg = f"Cannot interpret {self.option}={self.value!r}"
        if self.reason:
            msg += f": {self.reason}"
        return msg + "."
