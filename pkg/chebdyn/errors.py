class ChebdynError(Exception):
    code = 'error'
    exit_status = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def asdict(self):
        return {'code': self.code, 'message': self.message}


class ContractError(ChebdynError, ValueError):
    """A precondition of an operation does not hold."""
    code = 'contract'
    exit_status = 2


class LevelMismatch(ContractError, TypeError):
    code = 'level_mismatch'


class BudgetExceeded(ChebdynError):
    """The residue space to enumerate is larger than the configured level cap."""
    code = 'budget'
    exit_status = 3

    def __init__(self, level: int, limit: int):
        super().__init__(f"Level {level} exceeds the enumeration cap of {limit}")
        self.level = level
        self.limit = limit

    def asdict(self):
        result = super().asdict()
        result.update({'level': self.level, 'limit': self.limit})
        return result


class ConsistencyFault(ChebdynError, AssertionError):
    """An internal cross-check failed. Never expected to fire."""
    code = 'internal'


class ParseError(ContractError):
    code = 'parse'

    def __init__(self, message: str, position: int = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position

    def asdict(self):
        result = super().asdict()
        result['position'] = self.position
        return result


class UsageError(ContractError):
    code = 'usage'
