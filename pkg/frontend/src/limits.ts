// Static program limits, mirroring the engine's documented contract.
// Anything the builder lets through must pass the server's range checks.

export const MIN_COUNT = 1;
export const MAX_COUNT = 99;
export const MAX_DEPTH = 8;
export const MAX_STATEMENTS = 200;
export const MAX_NOT_DEPTH = 4;
