"""Services package."""
from src.services.filter_service import FilterService
from src.services.synth_service import SynthService
from src.services.verify_service import CheckResult, VerifyService

__all__ = ['FilterService', 'SynthService', 'VerifyService', 'CheckResult']
