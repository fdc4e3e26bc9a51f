export * from "./types.js";
export * from "./rational.js";
export * from "./preview.js";
export * from "./api.js";
export * from "./matrix.js";
export * from "./heat.js";
export * from "./ranking.js";
export * from "./elicitation.js";
export * from "./state.js";
