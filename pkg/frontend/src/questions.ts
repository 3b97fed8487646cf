/** The 16 questionnaire fields, in form order, with display labels. */

export const SYMPTOM_KEYS = [
  "polyuria",
  "polydipsia",
  "sudden_weight_loss",
  "weakness",
  "polyphagia",
  "genital_thrush",
  "visual_blurring",
  "itching",
  "irritability",
  "delayed_healing",
  "partial_paresis",
  "muscle_stiffness",
  "alopecia",
  "obesity",
] as const;

export type SymptomKey = (typeof SYMPTOM_KEYS)[number];
export type FieldKey = "age" | "gender" | SymptomKey;

export const FIELD_KEYS: readonly FieldKey[] = ["age", "gender", ...SYMPTOM_KEYS];

export const FIELD_LABELS: Record<FieldKey, string> = {
  age: "Age",
  gender: "Gender",
  polyuria: "Polyuria",
  polydipsia: "Polydipsia",
  sudden_weight_loss: "Sudden weight loss",
  weakness: "Weakness",
  polyphagia: "Polyphagia",
  genital_thrush: "Genital thrush",
  visual_blurring: "Visual blurring",
  itching: "Itching",
  irritability: "Irritability",
  delayed_healing: "Delayed healing",
  partial_paresis: "Partial paresis",
  muscle_stiffness: "Muscle stiffness",
  alopecia: "Alopecia",
  obesity: "Obesity",
};
