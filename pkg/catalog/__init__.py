"""
恒等式目录与校验驱动
"""

from catalog.context import BuildContext
from catalog.records import RECORDS, IdentityRecord, catalog_list, get_record
from catalog.verifier import MUTATIONS, effective_caps, verify, verify_all

__all__ = [
    "BuildContext", "RECORDS", "IdentityRecord", "catalog_list", "get_record",
    "MUTATIONS", "effective_caps", "verify", "verify_all",
]
