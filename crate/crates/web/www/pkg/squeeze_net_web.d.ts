/* tslint:disable */
/* eslint-disable */

/**
 * Rows `(|T|, γ, γ_sequential)` for `|T|` in `[0, 1]`.
 */
export function coherence_curve(g: number, points: number): Float64Array;

/**
 * Rows `(φ_S, n_S1, n_S2)` for `φ_S` over one period.
 */
export function photocurrent_curve(g: number, tmag: number, theta_t: number, points: number): Float64Array;

/**
 * Rows `(θ, F_closed, F_exact)` for `θ` over `[0, π]`.
 */
export function qfi_curve(g: number, tmag: number, beta: number, points: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly coherence_curve: (a: number, b: number) => [number, number, number, number];
    readonly photocurrent_curve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly qfi_curve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
